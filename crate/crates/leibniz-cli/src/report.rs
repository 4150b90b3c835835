//! Command implementations and report rendering.
//!
//! JSON output is deterministic: struct field order is fixed, corpora are
//! processed in sorted file order, and timing is kept out of the JSON.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use leibniz::algebra::{Algebra, Element, SubalgebraHandle};
use leibniz::checks::{run_checks, CheckOutcome, CheckStatus};
use leibniz::engel::{engel_subalgebra, minimal_engel_search, CartanCertificate};
use leibniz::error::Error;
use leibniz::field::{FieldDescriptor, FieldScalar};
use leibniz::generators::{
    barnes_algebra, cyclic_algebra, irreducible_companion, random_nilpotent, split_extension,
    standard_corpus, CorpusEntry, KnownFlags, SMode,
};
use leibniz::io::{read_algebra, read_corpus, write_corpus};
use leibniz::linalg::{Matrix, Subspace};
use leibniz::structure::{
    conjugacy_theorem_check, frattini, is_primitive, primitive_complement, socle, ConjugatorEntry,
};

use crate::{AnalyzeArgs, GenerateArgs};

// ---------------------------------------------------------------- verify

#[derive(Serialize)]
struct VerifyReport {
    file: String,
    dim: usize,
    field: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    triple: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<Vec<String>>,
}

pub fn cmd_verify(file: &Path, json: bool) -> Result<ExitCode, Error> {
    let algebra = read_algebra(file)?;
    let verdict = algebra.verify_leibniz();
    let report = match &verdict {
        v if v.passed() => VerifyReport {
            file: file.display().to_string(),
            dim: algebra.dim(),
            field: algebra.field().to_string(),
            verdict: "pass",
            triple: None,
            lhs: None,
            rhs: None,
        },
        leibniz::algebra::LeibnizVerdict::Fail { triple, lhs, rhs } => VerifyReport {
            file: file.display().to_string(),
            dim: algebra.dim(),
            field: algebra.field().to_string(),
            verdict: "fail",
            triple: Some([triple.0 + 1, triple.1 + 1, triple.2 + 1]),
            lhs: Some(lhs.iter().map(|s| s.to_string()).collect()),
            rhs: Some(rhs.iter().map(|s| s.to_string()).collect()),
        },
        _ => unreachable!(),
    };
    if json {
        println!("{}", to_json(&report));
    } else if report.verdict == "pass" {
        println!(
            "ok: {} is a Leibniz algebra (dim {} over {})",
            report.file, report.dim, report.field
        );
    } else {
        let t = report.triple.expect("fail carries a triple");
        println!(
            "FAIL: identity a(bc) = (ab)c + b(ac) breaks at basis triple ({}, {}, {})",
            t[0], t[1], t[2]
        );
        println!("  lhs: {}", report.lhs.as_ref().expect("fail").join(", "));
        println!("  rhs: {}", report.rhs.as_ref().expect("fail").join(", "));
    }
    Ok(if report.verdict == "pass" {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
struct SeriesReport {
    lower_central_dims: Vec<usize>,
    derived_dims: Vec<usize>,
    nilpotency_class: Option<usize>,
}

#[derive(Serialize)]
struct NormalizerReport {
    subspace: Subspace,
    left: Subspace,
    right: Subspace,
    full: Subspace,
    right_is_subalgebra: bool,
}

#[derive(Serialize)]
struct EngelReport {
    element: Vec<String>,
    space: Subspace,
    fitting_image: Subspace,
}

#[derive(Serialize)]
struct PrimitiveReport {
    primitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    socle: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_lie: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjugators: Option<Vec<ConjugatorEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_conjugate: Option<bool>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    file: String,
    dim: usize,
    field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    nilpotent: bool,
    soluble: bool,
    lie: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    series: Option<SeriesReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left_centre: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lie_quotient: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalizers: Option<NormalizerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    engel: Option<EngelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cartan: Option<CartanCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    socle: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    frattini: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive: Option<PrimitiveReport>,
}

pub fn cmd_analyze(args: &AnalyzeArgs, json: bool, budget: u64) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let algebra = read_algebra(&args.file)?;
    if let leibniz::algebra::LeibnizVerdict::Fail { triple, .. } = algebra.verify_leibniz() {
        return Err(Error::Parse(format!(
            "{}: not a Leibniz algebra (fails at basis triple ({}, {}, {}))",
            args.file.display(),
            triple.0 + 1,
            triple.1 + 1,
            triple.2 + 1
        )));
    }
    let mut report = AnalyzeReport {
        file: args.file.display().to_string(),
        dim: algebra.dim(),
        field: algebra.field().to_string(),
        labels: algebra.labels().map(|l| l.to_vec()),
        nilpotent: algebra.is_nilpotent(),
        soluble: algebra.is_soluble(),
        lie: algebra.is_lie(),
        series: None,
        left_centre: None,
        lie_quotient: None,
        normalizers: None,
        engel: None,
        cartan: None,
        socle: None,
        frattini: None,
        primitive: None,
    };
    if args.series {
        report.series = Some(SeriesReport {
            lower_central_dims: algebra.lower_central_series().iter().map(Subspace::dim).collect(),
            derived_dims: algebra.derived_series().iter().map(Subspace::dim).collect(),
            nilpotency_class: algebra.nilpotency_class(),
        });
    }
    if args.centres {
        report.left_centre = Some(algebra.left_centre());
        report.lie_quotient = Some(algebra.lie_quotient_verdict());
    }
    if let Some(spec) = &args.normalizer {
        let space = parse_subspace(&algebra, spec)?;
        let handle = SubalgebraHandle::new(&algebra, space.clone())
            .map_err(|_| Error::Parse(format!("{:?} does not span a subalgebra", spec)))?;
        let norms = algebra.normalizers(&handle);
        report.normalizers = Some(NormalizerReport {
            subspace: space,
            right_is_subalgebra: algebra.is_subalgebra(&norms.right),
            left: norms.left,
            right: norms.right,
            full: norms.full,
        });
    }
    if let Some(spec) = &args.engel {
        let element = parse_element(&algebra, spec)?;
        let engel = engel_subalgebra(&algebra, &element);
        report.engel = Some(EngelReport {
            element: element.coords.iter().map(|s| s.to_string()).collect(),
            space: engel.space,
            fitting_image: engel.fitting_image,
        });
    }
    if args.cartan {
        report.cartan = Some(minimal_engel_search(&algebra)?.certificate);
    }
    if args.socle {
        report.socle = Some(socle(&algebra, budget)?);
    }
    if args.frattini {
        report.frattini = Some(frattini(&algebra, budget)?);
    }
    if args.primitive {
        report.primitive = Some(match is_primitive(&algebra, budget)? {
            None => PrimitiveReport {
                primitive: false,
                socle: None,
                is_lie: None,
                complement: None,
                complement_count: None,
                conjugators: None,
                all_conjugate: None,
            },
            Some(cert) => {
                let complement = match primitive_complement(&algebra, budget) {
                    Ok(m) => Some(m),
                    Err(Error::NoComplementNeeded) => None,
                    Err(e) => return Err(e),
                };
                let census = conjugacy_theorem_check(&algebra, budget)?;
                PrimitiveReport {
                    primitive: true,
                    socle: Some(cert.socle),
                    is_lie: Some(cert.is_lie),
                    complement,
                    complement_count: Some(census.complement_count),
                    conjugators: Some(census.conjugators),
                    all_conjugate: Some(census.all_conjugate),
                }
            }
        });
    }

    if json {
        println!("{}", to_json(&report));
    } else {
        render_analyze_text(&algebra, &report, start.elapsed().as_millis());
    }
    Ok(ExitCode::SUCCESS)
}

fn render_analyze_text(algebra: &Algebra, report: &AnalyzeReport, millis: u128) {
    let labels = algebra.labels();
    println!(
        "{}: dim {} over {}{}",
        report.file,
        report.dim,
        report.field,
        labels
            .map(|l| format!(" (basis {})", l.join(", ")))
            .unwrap_or_default()
    );
    println!(
        "  nilpotent: {}   soluble: {}   lie: {}",
        report.nilpotent, report.soluble, report.lie
    );
    if let Some(series) = &report.series {
        println!(
            "  lower central dims: {:?}   derived dims: {:?}{}",
            series.lower_central_dims,
            series.derived_dims,
            series
                .nilpotency_class
                .map(|c| format!("   class {}", c))
                .unwrap_or_default()
        );
    }
    if let Some(lc) = &report.left_centre {
        println!("  left centre: {}", format_subspace(lc, labels));
        println!(
            "  quotient by left centre is Lie: {}",
            report.lie_quotient.unwrap_or(false)
        );
    }
    if let Some(n) = &report.normalizers {
        println!("  normalizers of {}:", format_subspace(&n.subspace, labels));
        println!("    left:  {}", format_subspace(&n.left, labels));
        println!(
            "    right: {}{}",
            format_subspace(&n.right, labels),
            if n.right_is_subalgebra {
                ""
            } else {
                "  (not a subalgebra)"
            }
        );
        println!("    full:  {}", format_subspace(&n.full, labels));
    }
    if let Some(e) = &report.engel {
        println!(
            "  Engel subalgebra of ({}): {}",
            e.element.join(","),
            format_subspace(&e.space, labels)
        );
        println!("    Fitting image: {}", format_subspace(&e.fitting_image, labels));
    }
    if let Some(c) = &report.cartan {
        println!(
            "  Cartan subalgebra: {} (nilpotency class {})",
            format_subspace(&c.subalgebra, labels),
            c.nilpotency_class
        );
        if let Some(w) = &c.witness_element {
            println!("    witness element: ({})", w.join(","));
        }
    }
    if let Some(s) = &report.socle {
        println!("  socle: {}", format_subspace(s, labels));
    }
    if let Some(f) = &report.frattini {
        println!("  Frattini subalgebra: {}", format_subspace(f, labels));
    }
    if let Some(p) = &report.primitive {
        if p.primitive {
            println!(
                "  primitive: yes (socle {}, {} complement(s), all conjugate: {})",
                format_subspace(p.socle.as_ref().expect("primitive"), labels),
                p.complement_count.unwrap_or(0),
                p.all_conjugate.unwrap_or(true)
            );
            if let Some(m) = &p.complement {
                println!("    complement: {}", format_subspace(m, labels));
            }
        } else {
            println!("  primitive: no");
        }
    }
    println!("  ({} ms)", millis);
}

// ---------------------------------------------------------------- theorems

#[derive(Serialize)]
struct AlgebraChecks {
    file: String,
    dim: usize,
    field: String,
    results: Vec<CheckOutcome>,
}

#[derive(Serialize)]
struct TheoremsReport {
    corpus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    filter: Option<String>,
    algebras: Vec<AlgebraChecks>,
    pass: usize,
    fail: usize,
    skip: usize,
}

pub fn cmd_theorems(
    dir: &Path,
    filter: Option<&str>,
    json: bool,
    budget: u64,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let corpus = read_corpus(dir)?;
    let algebras: Vec<AlgebraChecks> = corpus
        .par_iter()
        .map(|(file, algebra)| AlgebraChecks {
            file: file.clone(),
            dim: algebra.dim(),
            field: algebra.field().to_string(),
            results: run_checks(algebra, budget, filter),
        })
        .collect();
    let count = |status: CheckStatus| {
        algebras
            .iter()
            .flat_map(|a| &a.results)
            .filter(|r| r.status == status)
            .count()
    };
    let report = TheoremsReport {
        corpus: dir.display().to_string(),
        filter: filter.map(String::from),
        pass: count(CheckStatus::Pass),
        fail: count(CheckStatus::Fail),
        skip: count(CheckStatus::Skip),
        algebras,
    };
    if json {
        println!("{}", to_json(&report));
    } else {
        for a in &report.algebras {
            println!("== {} (dim {} over {})", a.file, a.dim, a.field);
            for r in &a.results {
                let tag = match r.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skip => "skip",
                };
                println!("   {:<14} {:<4} {}", r.id, tag, r.detail);
            }
        }
        println!(
            "== {} algebras: {} pass, {} fail, {} skip ({} ms)",
            report.algebras.len(),
            report.pass,
            report.fail,
            report.skip,
            start.elapsed().as_millis()
        );
    }
    Ok(if report.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------- generate

#[derive(Serialize)]
struct GenerateReport {
    written: Vec<String>,
}

pub fn cmd_generate(args: &GenerateArgs, json: bool, seed: u64) -> Result<ExitCode, Error> {
    let field = parse_field(&args.field)?;
    let tag = match field {
        FieldDescriptor::Rationals => "q".to_string(),
        FieldDescriptor::PrimeField(p) => format!("f{}", p),
    };
    let entries: Vec<CorpusEntry> = match args.kind.as_str() {
        "paper-example" => vec![CorpusEntry {
            name: "barnes_example".into(),
            algebra: barnes_algebra(field),
            provenance: format!("paper-example field={}", field),
            flags: KnownFlags {
                nilpotent: Some(false),
                soluble: Some(true),
                lie: Some(false),
                primitive: None,
            },
        }],
        "cyclic" => vec![CorpusEntry {
            name: format!("cyclic{}_{}", args.dim, tag),
            algebra: cyclic_algebra(args.dim.max(1), field),
            provenance: format!("cyclic dim={} field={}", args.dim, field),
            flags: KnownFlags {
                nilpotent: Some(true),
                soluble: Some(true),
                lie: Some(args.dim <= 1),
                primitive: None,
            },
        }],
        "random-nilpotent" => vec![CorpusEntry {
            name: format!("randnil{}_s{}_{}", args.dim, seed, tag),
            algebra: random_nilpotent(args.dim, field, seed)?,
            provenance: format!("random-nilpotent dim={} seed={} field={}", args.dim, seed, field),
            flags: KnownFlags {
                nilpotent: Some(true),
                soluble: Some(true),
                lie: None,
                primitive: None,
            },
        }],
        "split" => {
            let s_mode = match args.s_mode.as_str() {
                "zero" => SMode::SZero,
                "minus-t" => SMode::SMinusT,
                other => return Err(Error::Parse(format!("unknown s-mode {:?}", other))),
            };
            let lie = Algebra::from_products(1, field, &[], None)?;
            let (rep, module_dim) = match args.rep.as_str() {
                "scalar" => (vec![Matrix::identity(args.module_dim, field)], args.module_dim),
                "companion" => (vec![irreducible_companion(field)], 2),
                "jordan" => {
                    let mut t = Matrix::zero(args.module_dim, args.module_dim, field);
                    for i in 0..args.module_dim.saturating_sub(1) {
                        t.set(i, i + 1, field.one());
                    }
                    (vec![t], args.module_dim)
                }
                other => return Err(Error::Parse(format!("unknown rep {:?}", other))),
            };
            vec![CorpusEntry {
                name: format!("split_{}_{}_{}", args.rep, s_mode.as_str().replace('-', ""), tag),
                algebra: split_extension(&lie, &rep, module_dim, s_mode)?,
                provenance: format!(
                    "split module_dim={} s_mode={} field={}",
                    module_dim,
                    s_mode.as_str(),
                    field
                ),
                flags: KnownFlags::default(),
            }]
        }
        "corpus" => standard_corpus(),
        other => return Err(Error::Parse(format!("unknown kind {:?}", other))),
    };
    write_corpus(&args.out, &entries)
        .map_err(|e| Error::Parse(format!("{}: {}", args.out.display(), e)))?;
    let mut written: Vec<String> = entries.iter().map(|e| format!("{}.json", e.name)).collect();
    written.push("manifest.json".into());
    let report = GenerateReport { written };
    if json {
        println!("{}", to_json(&report));
    } else {
        println!(
            "wrote {} file(s) to {}",
            report.written.len(),
            args.out.display()
        );
        for f in &report.written {
            println!("  {}", f);
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- helpers

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn parse_field(s: &str) -> Result<FieldDescriptor, Error> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldDescriptor::Rationals);
    }
    let digits = s
        .strip_prefix('F')
        .or_else(|| s.strip_prefix('f'))
        .ok_or_else(|| Error::Parse(format!("unknown field {:?} (use Q or F<p>)", s)))?;
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::Parse(format!("unknown field {:?} (use Q or F<p>)", s)))?;
    FieldDescriptor::prime(p)
}

/// Parse an element: a basis label when labels exist, otherwise
/// comma-separated scalar strings in basis order.
fn parse_element(algebra: &Algebra, spec: &str) -> Result<Element, Error> {
    let spec = spec.trim();
    if let Some(labels) = algebra.labels() {
        if let Some(idx) = labels.iter().position(|l| l == spec) {
            return Ok(algebra.basis_element(idx));
        }
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != algebra.dim() {
        return Err(Error::Parse(format!(
            "element {:?} has {} coordinates, expected {}",
            spec,
            parts.len(),
            algebra.dim()
        )));
    }
    let coords: Result<Vec<FieldScalar>, Error> = parts
        .iter()
        .map(|p| FieldScalar::parse(p, &algebra.field()))
        .collect();
    Ok(Element::new(coords?))
}

/// Parse a subspace: ';'-separated element specs, spanned.
fn parse_subspace(algebra: &Algebra, spec: &str) -> Result<Subspace, Error> {
    let rows: Result<Vec<Vec<FieldScalar>>, Error> = spec
        .split(';')
        .map(|part| parse_element(algebra, part).map(|e| e.coords))
        .collect();
    Ok(Subspace::from_spanning(Matrix::from_rows(
        rows?,
        algebra.dim(),
        algebra.field(),
    )))
}

/// Human-readable subspace: labeled linear combinations when labels exist.
fn format_subspace(s: &Subspace, labels: Option<&[String]>) -> String {
    if s.dim() == 0 {
        return "0".into();
    }
    if s.is_full() {
        return format!("the whole algebra (dim {})", s.dim());
    }
    let vectors: Vec<String> = s
        .basis_vectors()
        .map(|row| format_vector(row, labels))
        .collect();
    format!("span{{ {} }}", vectors.join(", "))
}

fn format_vector(coords: &[FieldScalar], labels: Option<&[String]>) -> String {
    match labels {
        None => format!(
            "({})",
            coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        ),
        Some(labels) => {
            let mut terms = Vec::new();
            for (c, label) in coords.iter().zip(labels) {
                if c.is_zero() {
                    continue;
                }
                let coefficient = c.to_string();
                terms.push(match coefficient.as_str() {
                    "1" => label.clone(),
                    "-1" => format!("-{}", label),
                    _ => format!("{}·{}", coefficient, label),
                });
            }
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        }
    }
}
