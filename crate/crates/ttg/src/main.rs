//! Thin command-line front door. Every subcommand maps to one library
//! operation; outputs come in text and JSON carrying the same data.
//!
//! Exit codes: 0 success; 1 a checked property failed (a failing `verify`
//! suite, or `member --expect` mismatch); 2 usage or parse error; 3 budget
//! exhausted or an unknown answer.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;
use ttg::complexes::{ann_complex, ann_map, koszul, tensor, ChainMap, FreeComplex};
use ttg::error::Error;
use ttg::formal::{loewy_profile, minimal_c, tensor_formal, FormalComplex};
use ttg::ideals::{
    dvr_fiber_report, enumerate_artinian, join, meet, member, Answer, DescriptorKind,
    IdealDescriptor, Obj,
};
use ttg::nilpotence::{find_nilpotence_index, NilpotenceOutcome, DEFAULT_T_MAX};
use ttg::rings::{Elem, Ring};
use ttg::spectra::{artinian_spc_report, s_of_support, SpclSet};
use ttg::verify::{run_all, run_suite, VerifyReport};
use ttg::DEFAULT_SIZE_BUDGET;

const DEFAULT_SEED: u64 = 0x7463;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "ttg",
    version,
    about = "exact computation with thick tensor ideals of right bounded derived categories"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Support of a complex (union of homology supports).
    Supp {
        #[arg(long)]
        ring: String,
        #[arg(long, conflicts_with_all = ["formal", "koszul"])]
        complex: Option<String>,
        #[arg(long)]
        formal: Option<String>,
        /// Comma-separated ring elements; uses the Koszul complex on them.
        #[arg(long)]
        koszul: Option<String>,
    },
    /// Annihilator ideal of a complex or chain map.
    Ann {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        koszul: Option<String>,
        #[arg(long = "map", value_name = "FILE")]
        map_file: Option<String>,
    },
    /// Per-degree homology of a complex file.
    Homology {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        complex: String,
    },
    /// Print the Koszul complex on a sequence, in the complex file format.
    Koszul {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elements: String,
    },
    /// Tensor product of two complex files (or two formal files with a
    /// window).
    Tensor {
        #[arg(long)]
        ring: String,
        #[arg(long, num_args = 2)]
        complex: Option<Vec<String>>,
        #[arg(long, num_args = 2)]
        formal: Option<Vec<String>>,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Membership of an object in a named thick tensor ideal.
    Member {
        #[arg(long)]
        ring: String,
        /// zero | whole | compact{..} | tame{..} | S(..) | L<c> | gen[files]
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        formal: Option<String>,
        /// Exit 1 unless the answer matches.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Meet and join of two compact descriptors.
    Lattice {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Enumerate all thick tensor ideals of an artinian ring.
    ClassifyArtinian {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 30)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The Spec R <-> Spc correspondence report for an artinian ring.
    SpcReport {
        #[arg(long)]
        ring: String,
    },
    /// Least c with the formal complex in L_c, if any.
    MinimalC {
        #[arg(long)]
        formal: String,
        #[arg(long, default_value_t = 16)]
        window: i64,
    },
    /// Smash-nilpotence search for a chain map file.
    Nilpotence {
        #[arg(long)]
        ring: String,
        #[arg(long = "map", value_name = "FILE")]
        map_file: String,
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        budget: u32,
        /// Write the homotopy witness here on success.
        #[arg(long)]
        witness_out: Option<String>,
    },
    /// The fibers of s over the DVR, with separating witnesses.
    FiberReport {
        #[arg(long, default_value_t = 3)]
        cmax: u32,
    },
    /// Run a named identity/property suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 32)]
        window: i64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The unique maximal element of the complement of a spcl set, if any.
    SOfSupp {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        spcl: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeBudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(format: Format, text: &str, value: serde_json::Value) {
    match format {
        Format::Text => println!("{}", text.trim_end()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
    }
}

fn load(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn parse_elements(ring: &Ring, s: &str) -> Result<Vec<Elem>, Error> {
    s.split(',')
        .map(|tok| ring.parse_elem(tok.trim()))
        .collect()
}

fn size_budget(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("TT_SIZE_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_SIZE_BUDGET)
}

fn load_complex_arg(
    ring: &Ring,
    complex: &Option<String>,
    koszul_arg: &Option<String>,
) -> Result<FreeComplex, Error> {
    match (complex, koszul_arg) {
        (Some(path), None) => {
            let x = FreeComplex::parse(&load(path)?)?;
            if x.ring != *ring {
                return Err(Error::RingMismatch(ring.to_string(), x.ring.to_string()));
            }
            Ok(x)
        }
        (None, Some(xs)) => koszul(ring, &parse_elements(ring, xs)?),
        _ => Err(Error::Parse(
            "exactly one of --complex/--koszul is required".into(),
        )),
    }
}

fn parse_descriptor(ring: &Ring, s: &str) -> Result<IdealDescriptor, Error> {
    if let Some(rest) = s.trim().strip_prefix("gen[") {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("bad descriptor '{s}'")))?;
        let mut gens = Vec::new();
        for path in inner.split(',').filter(|p| !p.trim().is_empty()) {
            let x = FreeComplex::parse(&load(path.trim())?)?;
            if x.ring != *ring {
                return Err(Error::RingMismatch(ring.to_string(), x.ring.to_string()));
            }
            gens.push(x);
        }
        return IdealDescriptor::new(ring.clone(), DescriptorKind::GenBounded(gens));
    }
    IdealDescriptor::parse(ring, s)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Supp {
            ring,
            complex,
            formal,
            koszul: kz,
        } => {
            let r = Ring::parse(ring)?;
            let supp = if let Some(path) = formal {
                let x = FormalComplex::parse(&load(path)?)?;
                match x.supp() {
                    Some(s) => s,
                    None => {
                        emit(
                            fmt,
                            "unknown (window tail)",
                            json!({"supp": null, "reason": "window tail"}),
                        );
                        return Ok(ExitCode::from(3));
                    }
                }
            } else {
                load_complex_arg(&r, complex, kz)?.supp()?
            };
            emit(fmt, &supp.render(), json!({"supp": supp.render()}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ann {
            ring,
            complex,
            koszul: kz,
            map_file,
        } => {
            let r = Ring::parse(ring)?;
            let ideal = if let Some(path) = map_file {
                let f = ChainMap::parse(&load(path)?)?;
                ann_map(&f)?
            } else {
                ann_complex(&load_complex_arg(&r, complex, kz)?)?
            };
            emit(fmt, &ideal.render(), json!({"ann": ideal.render()}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Homology { ring, complex } => {
            let r = Ring::parse(ring)?;
            let x = FreeComplex::parse(&load(complex)?)?;
            if x.ring != r {
                return Err(Error::RingMismatch(r.to_string(), x.ring.to_string()));
            }
            let h = x.homology()?;
            let mut text = String::new();
            let mut entries = Vec::new();
            if h.is_empty() {
                text.push_str("exact (all homology vanishes)\n");
            }
            for (i, m) in &h {
                text.push_str(&format!("H_{i} = {}\n", m.render()));
                entries.push(json!({"degree": i, "module": m.render()}));
            }
            emit(fmt, &text, json!({"homology": entries}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Koszul { ring, elements } => {
            let r = Ring::parse(ring)?;
            let k = koszul(&r, &parse_elements(&r, elements)?)?;
            emit(fmt, &k.render(), json!({"complex": k.render()}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tensor {
            ring,
            complex,
            formal,
            window,
            budget,
        } => {
            let r = Ring::parse(ring)?;
            match (complex, formal) {
                (Some(paths), None) => {
                    let a = FreeComplex::parse(&load(&paths[0])?)?;
                    let b = FreeComplex::parse(&load(&paths[1])?)?;
                    if a.ring != r || b.ring != r {
                        return Err(Error::RingMismatch(r.to_string(), a.ring.to_string()));
                    }
                    let t = tensor(&a, &b, size_budget(*budget))?;
                    emit(fmt, &t.render(), json!({"complex": t.render()}));
                    Ok(ExitCode::SUCCESS)
                }
                (None, Some(paths)) => {
                    if r != Ring::Dvr {
                        return Err(Error::UnsupportedRing(
                            "formal tensor products live over the DVR".into(),
                        ));
                    }
                    let w = window.unwrap_or(16);
                    let a = FormalComplex::parse(&load(&paths[0])?)?;
                    let b = FormalComplex::parse(&load(&paths[1])?)?;
                    let t = tensor_formal(&a, &b, w)?;
                    emit(fmt, &t.render(), json!({"formal": t.render(), "window": w}));
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err(Error::Parse(
                    "pass either two --complex files or two --formal files".into(),
                )),
            }
        }
        Cmd::Member {
            ring,
            ideal,
            complex,
            formal,
            expect,
        } => {
            let r = Ring::parse(ring)?;
            let d = parse_descriptor(&r, ideal)?;
            let obj = match (complex, formal) {
                (Some(path), None) => {
                    let x = FreeComplex::parse(&load(path)?)?;
                    if x.ring != r {
                        return Err(Error::RingMismatch(r.to_string(), x.ring.to_string()));
                    }
                    Obj::Free(x)
                }
                (None, Some(path)) => Obj::Formal(FormalComplex::parse(&load(path)?)?),
                _ => {
                    return Err(Error::Parse(
                        "exactly one of --complex/--formal is required".into(),
                    ))
                }
            };
            let ans = member(&d, &obj)?;
            emit(fmt, &ans.to_string(), serde_json::to_value(&ans).unwrap());
            let code = match (&ans.answer, expect.as_deref()) {
                (Answer::Unknown(_), _) => ExitCode::from(3),
                (Answer::Yes, Some(e)) if !e.eq_ignore_ascii_case("yes") => ExitCode::from(1),
                (Answer::No, Some(e)) if !e.eq_ignore_ascii_case("no") => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            };
            Ok(code)
        }
        Cmd::Lattice { ring, a, b } => {
            let r = Ring::parse(ring)?;
            let da = parse_descriptor(&r, a)?;
            let db = parse_descriptor(&r, b)?;
            let m = meet(&da, &db)?;
            let j = join(&da, &db)?;
            emit(
                fmt,
                &format!("meet {}\njoin {}", m.render(), j.render()),
                json!({"meet": m.render(), "join": j.render()}),
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ClassifyArtinian {
            ring,
            samples,
            seed,
        } => {
            let r = Ring::parse(ring)?;
            let mut rng = ttg::corpus::rng(*seed);
            let objs: Vec<FreeComplex> = (0..*samples)
                .map(|_| ttg::corpus::rand_complex(&r, &mut rng, 3, 3))
                .collect();
            let rep = enumerate_artinian(&r, &objs)?;
            emit(fmt, &rep.to_string(), serde_json::to_value(&rep).unwrap());
            Ok(if rep.lattice_tables_ok && rep.membership_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::SpcReport { ring } => {
            let r = Ring::parse(ring)?;
            let rep = artinian_spc_report(&r)?;
            emit(fmt, &rep.to_string(), serde_json::to_value(&rep).unwrap());
            Ok(if rep.s_of_s_identity {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::MinimalC { formal, window } => {
            let x = FormalComplex::parse(&load(formal)?)?;
            let mc = minimal_c(&x);
            let profile = loewy_profile(&x, *window)?;
            let text = format!(
                "minimal-c: {mc}\nloewy profile (window {}): {}\ntail bound: {}",
                window,
                profile
                    .lengths
                    .iter()
                    .map(|(i, l)| format!("{i}:{l}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                profile.tail_bound.as_deref().unwrap_or("-")
            );
            emit(fmt, &text, json!({"minimal_c": mc, "profile": profile}));
            Ok(match mc {
                ttg::formal::MinimalC::UnknownWindow => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            })
        }
        Cmd::Nilpotence {
            ring,
            map_file,
            budget,
            witness_out,
        } => {
            let r = Ring::parse(ring)?;
            let f = ChainMap::parse(&load(map_file)?)?;
            if f.source.ring != r {
                return Err(Error::RingMismatch(
                    r.to_string(),
                    f.source.ring.to_string(),
                ));
            }
            let res = find_nilpotence_index(&f, *budget, size_budget(None))?;
            let chain: Vec<String> = res.ann_chain.iter().map(|i| i.render()).collect();
            let (outcome_json, code) = match &res.outcome {
                NilpotenceOutcome::Vanishes { t, witness } => {
                    if let Some(path) = witness_out {
                        let mut text = String::new();
                        for (i, m) in &witness.maps {
                            text.push_str(&format!("s {i}\n"));
                            for line in m.render_rows() {
                                text.push_str(&line);
                                text.push('\n');
                            }
                        }
                        std::fs::write(path, text)
                            .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
                    }
                    (json!({"vanishes": t}), ExitCode::SUCCESS)
                }
                NilpotenceOutcome::HypothesisFails { prime } => (
                    json!({"hypothesis_fails_at": prime.render(&r)}),
                    ExitCode::SUCCESS,
                ),
                NilpotenceOutcome::BudgetExhausted { t_max, .. } => {
                    (json!({"budget_exhausted": t_max}), ExitCode::from(3))
                }
            };
            emit(
                fmt,
                &res.to_string(),
                json!({"outcome": outcome_json, "ann_chain": chain}),
            );
            Ok(code)
        }
        Cmd::FiberReport { cmax } => {
            let rep = dvr_fiber_report(*cmax)?;
            emit(fmt, &rep.to_string(), serde_json::to_value(&rep).unwrap());
            Ok(if rep.separations.iter().all(|s| s.verified) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Verify {
            suite,
            window,
            seed,
        } => {
            let reports: Vec<VerifyReport> = if suite == "all" {
                run_all(*window, *seed)?
            } else {
                vec![run_suite(suite, *window, *seed)?]
            };
            let all_pass = reports.iter().all(|r| r.pass);
            let text = reports
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("");
            emit(fmt, &text, serde_json::to_value(&reports).unwrap());
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::SOfSupp { ring, spcl } => {
            let r = Ring::parse(ring)?;
            let w = SpclSet::parse(&r, spcl)?;
            let s = s_of_support(&w);
            emit(fmt, &s.render(&r), json!({"s_of_support": s.render(&r)}));
            Ok(ExitCode::SUCCESS)
        }
    }
}
