//! `walkmat`: walk matrices, Smith normal forms, ranks, equitable-partition
//! quotients, Chebyshev identities, and the Dynkin verification harness,
//! from the command line.
//!
//! Exit codes: 0 on success (and, for checking subcommands, all checks
//! passing), 1 when a check fails, 2 on usage or input errors.
//!
//! Big integers are serialized as decimal strings in JSON output: walk
//! matrix entries routinely exceed what a JSON number can carry.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use walkmat::graph::{divisor_of_partition, dynkin_graph, dynkin_partition, Graph};
use walkmat::verify::{
    cheb_identity_sweep, render_json_lines, render_table, verify_dynkin_range, verify_rank2_corpus,
};
use walkmat::{
    chebyshev, emit_graph6, parse_graph6, rank_mod2, rank_rational, smith_normal_form, walk,
    BigMatrix,
};

#[derive(Parser)]
#[command(
    name = "walkmat",
    about = "Exact walk-matrix and Smith-normal-form toolkit for graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// Edge list: first line `n`, then one `u v` per line (1-indexed).
    Edges,
    /// graph6 string.
    Graph6,
    /// Matrix text: `rows cols` header, then decimal entries.
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the Dynkin tree D_n (twin leaves 1,2 at vertex 3, then a path).
    GenDn {
        #[arg(long)]
        n: usize,
        /// Output format: edges, graph6, or the adjacency matrix.
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
    },
    /// Walk matrix [e, Me, ..., M^{m-1}e] of a graph or a square matrix.
    Walk {
        /// Input path, or `-` for standard input.
        #[arg(long)]
        input: String,
        /// How to read the input. `matrix` feeds an arbitrary square matrix.
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
        /// Drop the first row and last column (graph inputs only).
        #[arg(long)]
        hat: bool,
    },
    /// Smith normal form of a matrix (diagonal by default, witnesses with --json).
    Snf {
        #[arg(long)]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Rank of a matrix over the rationals, or over GF(2) with --mod2.
    Rank {
        #[arg(long)]
        input: String,
        #[arg(long)]
        mod2: bool,
    },
    /// Divisor matrix of D_n under the partition {{1,2},{3},...,{n}}.
    Divisor {
        #[arg(long)]
        n: usize,
        /// Also emit the characteristic matrix.
        #[arg(long)]
        json: bool,
    },
    /// Chebyshev data: coefficients and discriminant for --n, or the
    /// trigonometric identity sweep over --from/--to.
    Cheb {
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<u32>,
        #[arg(long, requires = "from")]
        to: Option<u32>,
        /// Log-space relative tolerance for the identity sweep.
        #[arg(long, default_value_t = chebyshev::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Run the full Dynkin harness for n in --from..=--to.
    Verify {
        #[arg(long, default_value_t = 4)]
        from: usize,
        #[arg(long, default_value_t = 64)]
        to: usize,
        /// One JSON object per n instead of the aligned table.
        #[arg(long)]
        json: bool,
    },
    /// GF(2) rank bound over a seeded random-graph corpus plus all D_n.
    Corpus {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Maximum graph order.
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::GenDn { n, format } => {
            let g = dynkin_graph(n)?;
            match format {
                GraphFormat::Edges => print!("{}", g.to_edge_list()),
                GraphFormat::Graph6 => println!("{}", emit_graph6(&g)),
                GraphFormat::Matrix => print!("{}", g.adjacency_matrix().to_text()),
            }
            Ok(true)
        }
        Command::Walk { input, format, hat } => {
            let text = read_input(&input)?;
            let w = match format {
                GraphFormat::Matrix => {
                    if hat {
                        bail!("--hat applies to graph inputs, not raw matrices");
                    }
                    walk::walk_matrix(&BigMatrix::parse_text(&text)?)?
                }
                _ => {
                    let g = parse_graph(&text, format)?;
                    if hat {
                        walk::hat_walk_matrix(&g)?
                    } else {
                        walk::graph_walk_matrix(&g)
                    }
                }
            };
            print!("{}", w.to_text());
            Ok(true)
        }
        Command::Snf { input, json } => {
            let m = BigMatrix::parse_text(&read_input(&input)?)?;
            let s = smith_normal_form(&m);
            if json {
                let value = json!({
                    "diag": s.diag.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "left": matrix_rows(&s.left),
                    "right": matrix_rows(&s.right),
                    "certified": s.certifies(&m)?,
                });
                println!("{value}");
            } else {
                let diag: Vec<String> = s.diag.iter().map(ToString::to_string).collect();
                println!("{}", diag.join(" "));
            }
            Ok(true)
        }
        Command::Rank { input, mod2 } => {
            let m = BigMatrix::parse_text(&read_input(&input)?)?;
            let r = if mod2 {
                rank_mod2(&m)
            } else {
                rank_rational(&m)
            };
            println!("{r}");
            Ok(true)
        }
        Command::Divisor { n, json } => {
            let g = dynkin_graph(n)?;
            let p = dynkin_partition(n)?;
            let d = divisor_of_partition(&g, &p)?;
            if json {
                let value = json!({
                    "n": n,
                    "characteristic": matrix_rows(&d.characteristic),
                    "divisor": matrix_rows(&d.divisor),
                });
                println!("{value}");
            } else {
                print!("{}", d.divisor.to_text());
            }
            Ok(true)
        }
        Command::Cheb {
            n,
            from,
            to,
            tol,
            json,
        } => match (n, from, to) {
            (Some(n), _, _) => {
                let t = chebyshev::chebyshev_t(n);
                let u = chebyshev::chebyshev_u(n);
                // Constant polynomials have no discriminant.
                let disc = (n >= 1).then(|| chebyshev::discriminant(&t)).transpose()?;
                if json {
                    let value = json!({
                        "n": n,
                        "t": t.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "u": u.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "disc_t": disc.as_ref().map(ToString::to_string),
                    });
                    println!("{value}");
                } else {
                    println!("T_{n} {}", coeff_line(t.coeffs()));
                    println!("U_{n} {}", coeff_line(u.coeffs()));
                    if let Some(disc) = disc {
                        println!("disc_T {disc}");
                    }
                }
                Ok(true)
            }
            (None, Some(from), Some(to)) => {
                let rows = cheb_identity_sweep(from, to, tol)?;
                let all_pass = rows.iter().all(|r| r.pass);
                if json {
                    for row in &rows {
                        println!("{}", serde_json::to_string(row)?);
                    }
                } else {
                    println!(
                        "{:<4} {:>13} {:>13} {:>13} {:>13} {:>13}  status",
                        "m", "root_diff", "cos_prod_t", "cos_prod_u", "sin_prod", "cos_sum"
                    );
                    for r in &rows {
                        println!(
                            "{:<4} {:>13.3e} {:>13.3e} {:>13.3e} {:>13} {:>13.3e}  {}",
                            r.m,
                            r.root_difference_residual,
                            r.cos_product_t_residual,
                            r.cos_product_u_residual,
                            r.sin_product_residual
                                .map_or("-".into(), |v| format!("{v:.3e}")),
                            r.cos_sum_worst_residual,
                            if r.pass { "pass" } else { "FAIL" }
                        );
                    }
                }
                Ok(all_pass)
            }
            _ => bail!("cheb needs either --n or both --from and --to"),
        },
        Command::Verify { from, to, json } => {
            let reports = verify_dynkin_range(from, to)?;
            let all_pass = reports.iter().all(|r| r.pass);
            if json {
                print!("{}", render_json_lines(&reports));
            } else {
                print!("{}", render_table(&reports));
                let status = if all_pass {
                    "all checks passed"
                } else {
                    "CHECKS FAILED"
                };
                println!("{} report(s): {status}", reports.len());
            }
            Ok(all_pass)
        }
        Command::Corpus {
            count,
            n,
            seed,
            json,
        } => {
            let violations = verify_rank2_corpus(count, n, seed)?;
            if json {
                let value = json!({
                    "count": count,
                    "n_max": n,
                    "seed": seed,
                    "violations": violations,
                });
                println!("{value}");
            } else {
                println!(
                    "checked {count} random graphs (n <= {n}, seed {seed}) plus the Dynkin family: {} violation(s)",
                    violations.len()
                );
                for v in &violations {
                    println!(
                        "  {} (n={}): rank2 {} > {}",
                        v.graph6, v.n, v.rank2, v.bound
                    );
                }
            }
            Ok(violations.is_empty())
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn parse_graph(text: &str, format: GraphFormat) -> anyhow::Result<Graph> {
    match format {
        GraphFormat::Edges => Ok(Graph::parse_edge_list(text)?),
        GraphFormat::Graph6 => Ok(parse_graph6(text.trim())?),
        GraphFormat::Matrix => unreachable!("matrix inputs are handled by the caller"),
    }
}

fn matrix_rows(m: &BigMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn coeff_line<T: ToString>(coeffs: &[T]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
