//! Thin command-line front end over the library. Exit codes: 0 on success,
//! 1 when a verification fails, 2 on malformed input or usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mpa::combinatorics::{enumerate_partitions, IntegerPartition, Multiset, MultisetTableau};
use mpa::config::Config;
use mpa::error::MpaError;
use mpa::mpalgebra::{
    embed, enumerate_basis, idempotent_e, multiply, structure_polys, MPElement, MultisetDiagram,
};
use mpa::partition_algebra::rat_matrix_to_json;
use mpa::rsk::{inverse_rsk, rsk_partition};
use mpa::schur_weyl::{centralizer_dimension, operator_span_dimension, phi};
use mpa::symfunc::{a_coeff_ssmt, lambda_set, r_coeff};
use mpa::verify::{run_criterion, CriterionResult};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "mpa", version, about = "Exact kernel for multiset partition algebras")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the diagram basis of the algebra for λ
    Basis {
        #[arg(long)]
        lambda: String,
    },
    /// Multiply two elements (JSON elements or single diagrams)
    Mul {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Structure polynomials of a basis pair, optionally for one target
    StructurePoly {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        target: Option<String>,
    },
    /// Embed an element into the partition algebra (orbit basis)
    Embed {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        a: String,
    },
    /// The idempotent e with e·P_k(ξ)·e isomorphic to the algebra for λ
    Idempotent {
        #[arg(long)]
        lambda: String,
    },
    /// Matrix of an element acting on F[M(n,λ)] at ξ = n
    Phi {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        /// Emit the matrix as plain CSV
        #[arg(long)]
        dense_csv: bool,
    },
    /// Check that evaluation at ξ = n is an algebra homomorphism with the
    /// predicted kernel dimension
    DualityCheck {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Number of symmetric-group orbits on M(n,λ)²
    CentralizerDim {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Multiplicity a_ν^λ; with --as-table, one row per ν ⊢ n
    ACoeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        as_table: bool,
    },
    /// Partitions ν ⊢ n with Σ (i−1)νᵢ ≤ k
    LambdaSet {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Restriction coefficients r_ν^λ for all ν ⊢ n (or one --nu)
    RCoeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Insertion pair of a multiset partition; --invert rebuilds it
    Rsk {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        invert: bool,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// Run acceptance criteria; --suite all or a comma list of ids 1..9
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Problem-size preset; only "desk" exists
        #[arg(long, default_value = "desk")]
        max_size: String,
    },
}

fn parse_lambda(s: &str) -> Result<Vec<u32>, MpaError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| MpaError::Malformed(format!("lambda part {t:?} is not a non-negative integer")))
        })
        .collect()
}

fn parse_json(s: &str) -> Result<serde_json::Value, MpaError> {
    serde_json::from_str(s).map_err(|e| MpaError::Malformed(format!("json: {e}")))
}

/// Accepts either a full element or a bare diagram.
fn parse_element(lambda: &[u32], s: &str) -> Result<MPElement, MpaError> {
    let v = parse_json(s)?;
    let e = if v.get("terms").is_some() {
        MPElement::from_json(&v)?
    } else {
        MPElement::basis_element(MultisetDiagram::from_json(&v)?)
    };
    if e.lambda != lambda {
        return Err(MpaError::LambdaMismatch);
    }
    Ok(e)
}

fn parse_diagram(lambda: &[u32], s: &str) -> Result<MultisetDiagram, MpaError> {
    let d = MultisetDiagram::from_json(&parse_json(s)?)?;
    if d.lambda() != lambda {
        return Err(MpaError::LambdaMismatch);
    }
    Ok(d)
}

fn tableau_to_json(t: &MultisetTableau) -> serde_json::Value {
    serde_json::json!({
        "shape": t.shape.parts(),
        "rows": t.rows.iter()
            .map(|r| r.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn tableau_from_json(v: &serde_json::Value) -> Result<MultisetTableau, MpaError> {
    let rows_v = v
        .get("rows")
        .and_then(|r| r.as_array())
        .ok_or_else(|| MpaError::Malformed("tableau json: missing rows".into()))?;
    let mut rows: Vec<Vec<Multiset>> = Vec::new();
    for row in rows_v {
        let cells = row
            .as_array()
            .ok_or_else(|| MpaError::Malformed("tableau json: row is not an array".into()))?;
        let mut out_row = Vec::new();
        for cell in cells {
            let entries: Vec<u32> = serde_json::from_value(cell.clone())
                .map_err(|e| MpaError::Malformed(format!("tableau json: cell: {e}")))?;
            out_row.push(Multiset::new(entries));
        }
        rows.push(out_row);
    }
    let shape = IntegerPartition::new(rows.iter().map(|r| r.len() as u32).collect());
    Ok(MultisetTableau { shape, rows })
}

fn print_value(format: Format, v: serde_json::Value, text: impl Fn() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&v).unwrap()),
        Format::Text => println!("{}", text()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, MpaError> {
    let cfg = Config::from_env();
    match cli.cmd {
        Cmd::Basis { lambda } => {
            let lambda = parse_lambda(&lambda)?;
            let basis = enumerate_basis(&lambda);
            let v = serde_json::Value::Array(basis.iter().map(|d| d.to_json()).collect());
            print_value(cli.format, v, || {
                let mut s = format!("{} classes for lambda {lambda:?}\n", basis.len());
                for d in &basis {
                    s += &format!("rank {}: {:?}\n", d.rank(), d.edges());
                }
                s.trim_end().to_string()
            });
        }
        Cmd::Mul { lambda, a, b } => {
            let lambda = parse_lambda(&lambda)?;
            let a = parse_element(&lambda, &a)?;
            let b = parse_element(&lambda, &b)?;
            let p = multiply(&a, &b)?;
            print_value(cli.format, p.to_json(), || {
                p.terms()
                    .map(|(d, c)| format!("({c}) * {:?}", d.edges()))
                    .collect::<Vec<_>>()
                    .join("\n+ ")
            });
        }
        Cmd::StructurePoly { lambda, g1, g2, target } => {
            let lambda = parse_lambda(&lambda)?;
            let g1 = parse_diagram(&lambda, &g1)?;
            let g2 = parse_diagram(&lambda, &g2)?;
            let mut polys = structure_polys(&g1, &g2)?;
            if let Some(t) = target {
                let t = parse_diagram(&lambda, &t)?;
                polys.retain(|g, _| *g == t);
            }
            let v = serde_json::Value::Array(
                polys
                    .iter()
                    .map(|(g, p)| {
                        serde_json::json!({
                            "target": g.to_json(),
                            "poly": p.coeffs().iter().map(mpa::arith::rat_to_string).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            );
            print_value(cli.format, v, || {
                polys
                    .iter()
                    .map(|(g, p)| format!("{:?}: {p}", g.edges()))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Cmd::Embed { lambda, a } => {
            let lambda = parse_lambda(&lambda)?;
            let e = embed(&parse_element(&lambda, &a)?);
            print_value(cli.format, e.to_json(), || format!("{e:?}"));
        }
        Cmd::Idempotent { lambda } => {
            let lambda = parse_lambda(&lambda)?;
            let e = idempotent_e(&lambda);
            print_value(cli.format, e.to_json(), || format!("{e:?}"));
        }
        Cmd::Phi { lambda, n, a, dense_csv } => {
            let lambda = parse_lambda(&lambda)?;
            let m = phi(&parse_element(&lambda, &a)?, n, &cfg)?;
            if dense_csv {
                for row in &m.rows {
                    println!(
                        "{}",
                        row.iter().map(mpa::arith::rat_to_string).collect::<Vec<_>>().join(",")
                    );
                }
            } else {
                let labels = m
                    .basis
                    .iter()
                    .map(|b| serde_json::to_value(&b.rows).unwrap())
                    .collect();
                let v = rat_matrix_to_json(labels, &m.rows);
                print_value(cli.format, v, || {
                    m.rows
                        .iter()
                        .map(|r| {
                            r.iter().map(mpa::arith::rat_to_string).collect::<Vec<_>>().join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
        }
        Cmd::DualityCheck { lambda, n } => {
            let lambda = parse_lambda(&lambda)?;
            let basis = enumerate_basis(&lambda);
            let images: Vec<_> = basis
                .iter()
                .map(|g| phi(&MPElement::basis_element(g.clone()), n, &cfg))
                .collect::<Result<_, _>>()?;
            let mut ok = true;
            for (i, g1) in basis.iter().enumerate() {
                for (j, g2) in basis.iter().enumerate() {
                    let prod = multiply(
                        &MPElement::basis_element(g1.clone()),
                        &MPElement::basis_element(g2.clone()),
                    )?;
                    if phi(&prod, n, &cfg)? != images[i].mul(&images[j]) {
                        ok = false;
                        eprintln!("homomorphism fails at pair ({i}, {j})");
                    }
                }
            }
            let span = operator_span_dimension(&images);
            let kernel = basis.len() - span;
            let expect = basis.iter().filter(|g| g.rank() > n).count();
            if kernel != expect {
                ok = false;
                eprintln!("kernel dimension {kernel} differs from rank-excess count {expect}");
            }
            let status = if ok { "pass" } else { "FAIL" };
            print_value(
                cli.format,
                serde_json::json!({
                    "passed": ok, "classes": basis.len(), "span": span, "kernel": kernel,
                }),
                || format!("duality check {status}: {} classes, span {span}, kernel {kernel}", basis.len()),
            );
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::CentralizerDim { lambda, n } => {
            let lambda = parse_lambda(&lambda)?;
            let d = centralizer_dimension(n, &lambda);
            print_value(cli.format, serde_json::json!(d), || d.to_string());
        }
        Cmd::ACoeff { lambda, nu, n, as_table } => {
            let lambda = parse_lambda(&lambda)?;
            if as_table {
                let n = n.ok_or_else(|| MpaError::Malformed("--as-table requires --n".into()))?;
                let rows: Vec<(Vec<u32>, u64)> = enumerate_partitions(n)
                    .iter()
                    .map(|nu| (nu.parts().to_vec(), a_coeff_ssmt(nu, &lambda)))
                    .collect();
                let v = serde_json::Value::Array(
                    rows.iter()
                        .map(|(nu, a)| serde_json::json!({"nu": nu, "a": a}))
                        .collect(),
                );
                print_value(cli.format, v, || {
                    rows.iter()
                        .map(|(nu, a)| format!("{nu:?}: {a}"))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            } else {
                let nu = nu.ok_or_else(|| MpaError::Malformed("need --nu or --as-table".into()))?;
                let nu = IntegerPartition::new(parse_lambda(&nu)?);
                let a = a_coeff_ssmt(&nu, &lambda);
                print_value(cli.format, serde_json::json!(a), || a.to_string());
            }
        }
        Cmd::LambdaSet { k, n } => {
            let set = lambda_set(k, n);
            let v = serde_json::Value::Array(
                set.iter().map(|p| serde_json::json!(p.parts())).collect(),
            );
            print_value(cli.format, v, || {
                set.iter().map(|p| format!("{:?}", p.parts())).collect::<Vec<_>>().join("\n")
            });
        }
        Cmd::RCoeff { lambda, n, nu } => {
            let lambda = parse_lambda(&lambda)?;
            let nus = match nu {
                Some(s) => vec![IntegerPartition::new(parse_lambda(&s)?)],
                None => enumerate_partitions(n),
            };
            let rows: Vec<(Vec<u32>, i64)> =
                nus.iter().map(|nu| (nu.parts().to_vec(), r_coeff(&lambda, nu))).collect();
            let v = serde_json::Value::Array(
                rows.iter().map(|(nu, r)| serde_json::json!({"nu": nu, "r": r})).collect(),
            );
            print_value(cli.format, v, || {
                rows.iter().map(|(nu, r)| format!("{nu:?}: {r}")).collect::<Vec<_>>().join("\n")
            });
        }
        Cmd::Rsk { lambda, n, partition, invert, t, s } => {
            if invert {
                let (t, s) = match (t, s) {
                    (Some(t), Some(s)) => (t, s),
                    _ => return Err(MpaError::Malformed("--invert needs --t and --s".into())),
                };
                let t = tableau_from_json(&parse_json(&t)?);
                let s = tableau_from_json(&parse_json(&s)?);
                let d = inverse_rsk(&t?, &s?)?;
                print_value(cli.format, d.to_json(), || format!("{:?}", d.edges()));
            } else {
                let lambda = parse_lambda(
                    &lambda.ok_or_else(|| MpaError::Malformed("need --lambda".into()))?,
                )?;
                let n = n.ok_or_else(|| MpaError::Malformed("need --n".into()))?;
                let p = partition.ok_or_else(|| MpaError::Malformed("need --partition".into()))?;
                let d = parse_diagram(&lambda, &p)?;
                let (t, s) = rsk_partition(&d, n)?;
                let v = serde_json::json!({"T": tableau_to_json(&t), "S": tableau_to_json(&s)});
                print_value(cli.format, v, || format!("T = {:?}\nS = {:?}", t.rows, s.rows));
            }
        }
        Cmd::Verify { suite, max_size } => {
            if max_size != "desk" {
                return Err(MpaError::Malformed(format!(
                    "unknown size preset {max_size:?}; only \"desk\" exists"
                )));
            }
            let ids: Vec<usize> = if suite == "all" {
                (1..=9).collect()
            } else {
                suite
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| MpaError::Malformed(format!("bad criterion id {t:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let mut results: Vec<CriterionResult> = Vec::new();
            for id in ids {
                results.push(run_criterion(id)?);
            }
            let all_passed = results.iter().all(|r| r.passed);
            for r in &results {
                let status = if r.passed { "pass" } else { "FAIL" };
                println!("criterion {}: {} — {} ({})", r.id, status, r.name, r.detail);
            }
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
