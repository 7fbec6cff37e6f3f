use std::io::{Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use rotschur::qsym::{f_to_m, is_schur_positive, q_of, schur_expand};
use rotschur::tableau::enumerate_syt;
use rotschur::{
    cdes_boxed, ijdt, jdt, psi, psi_orbits, rsk, Error, Partition, PermMultiset, Shape, Tableau,
};
use serde_json::{json, Value};

use crate::args::{Basis, Cli, SetInput, TableauInput, Verb};
use crate::format::{
    m_json, parse_set, parse_tableau, qsym_json, schur_json, set_json, set_text, tableau_compact,
    tableau_json,
};
use crate::suites;

/// Largest `nmax` a verify run accepts without `--allow-large`.
pub const NMAX_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Success, or the checked property holds.
    Ok,
    /// The checked property does not hold.
    False,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
        }
    }
}

fn read_source(inline: Option<&str>, file: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    match (inline, file) {
        (Some(s), _) => Ok(s.to_owned()),
        (None, Some(path)) => {
            std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
        }
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).context("cannot read stdin")?;
            Ok(s)
        }
    }
}

fn load_set(input: &SetInput, stdin: &mut dyn Read) -> Result<PermMultiset> {
    let text = read_source(input.set.as_deref(), input.file.as_deref(), stdin)?;
    let a = parse_set(&text, input.n)?;
    Ok(if input.closure {
        a.horizontal_closure()
    } else if input.left_closure {
        a.left_closure()
    } else {
        a
    })
}

fn load_tableau(input: &TableauInput, stdin: &mut dyn Read) -> Result<Tableau> {
    let text = read_source(input.tableau.as_deref(), input.file.as_deref(), stdin)?;
    parse_tableau(&text, input.boxed)
}

fn emit_tableau(out: &mut dyn Write, json: bool, t: &Tableau) -> Result<()> {
    if json {
        writeln!(out, "{}", tableau_json(t))?;
    } else {
        write!(out, "{}", t.to_ascii())?;
    }
    Ok(())
}

/// Runs one verb, writing its result to `out`.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<Status> {
    let json = cli.json;
    match &cli.verb {
        Verb::Qfun { input, basis } => {
            let q = q_of(&load_set(input, stdin)?);
            match (basis, json) {
                (Basis::F, false) => writeln!(out, "{q}")?,
                (Basis::F, true) => writeln!(out, "{}", qsym_json(&q))?,
                (Basis::M, false) => writeln!(out, "{}", f_to_m(&q))?,
                (Basis::M, true) => writeln!(out, "{}", m_json(&f_to_m(&q)))?,
            }
        }
        Verb::Expand { input } => {
            let q = q_of(&load_set(input, stdin)?);
            match schur_expand(&q) {
                Ok(e) if json => writeln!(out, "{}", schur_json(&e))?,
                Ok(e) => writeln!(out, "{e}")?,
                Err(Error::NotSymmetric) => {
                    if json {
                        writeln!(out, "{}", json!({"symmetric": false}))?;
                    } else {
                        writeln!(out, "not symmetric")?;
                    }
                    return Ok(Status::False);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Verb::Positivity { input } => {
            let q = q_of(&load_set(input, stdin)?);
            let expansion = schur_expand(&q).ok();
            let positive = is_schur_positive(&q);
            if json {
                let mut report =
                    json!({"symmetric": expansion.is_some(), "schur_positive": positive});
                if let Some(e) = &expansion {
                    report["expansion"] = schur_json(e);
                }
                writeln!(out, "{report}")?;
            } else {
                match &expansion {
                    None => writeln!(out, "not symmetric")?,
                    Some(e) if positive => writeln!(out, "schur-positive: {e}")?,
                    Some(e) => writeln!(out, "not schur-positive: {e}")?,
                }
            }
            if !positive {
                return Ok(Status::False);
            }
        }
        Verb::Closure { input } => {
            let a = load_set(input, stdin)?;
            if json {
                writeln!(out, "{}", set_json(&a))?;
            } else {
                write!(out, "{}", set_text(&a))?;
            }
        }
        Verb::Jdt { input, trace } => {
            let r = load_tableau(input, stdin)?;
            let (p, steps) = jdt(&r)?;
            if json && *trace {
                let steps: Vec<Value> = steps
                    .steps
                    .iter()
                    .map(|s| {
                        json!({
                            "entry": s.entry,
                            "partner": s.partner,
                            "direction": format!("{:?}", s.direction).to_lowercase(),
                            "from": [s.from.0, s.from.1],
                            "to": [s.to.0, s.to.1],
                        })
                    })
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({"result": tableau_json(&p), "steps": steps})
                )?;
            } else {
                if *trace {
                    for (i, (s, state)) in steps
                        .steps
                        .iter()
                        .zip(steps.states().iter().skip(1))
                        .enumerate()
                    {
                        writeln!(
                            out,
                            "step {}: {} moves {:?}, switching with {} -> {}",
                            i + 1,
                            s.entry,
                            s.direction,
                            s.partner,
                            tableau_compact(state)
                        )?;
                    }
                }
                emit_tableau(out, json, &p)?;
            }
        }
        Verb::Ijdt { input } => {
            let t = load_tableau(input, stdin)?;
            emit_tableau(out, json, &ijdt(&t)?)?;
        }
        Verb::Psi { input, k } => {
            let p = load_tableau(input, stdin)?;
            emit_tableau(out, json, &psi(&p, *k)?)?;
        }
        Verb::Orbit { lambda } => {
            let lambda: Partition = lambda
                .parse()
                .with_context(|| format!("invalid partition `{lambda}`"))?;
            let orbits = psi_orbits(&lambda)?;
            if json {
                let mut all = Vec::new();
                for orbit in &orbits {
                    let cdes: Vec<Vec<usize>> = orbit
                        .iter()
                        .map(|p| cdes_boxed(p).map(|c| c.to_vec()))
                        .collect::<Result<_, _>>()?;
                    let tableaux: Vec<Value> = orbit.iter().map(tableau_json).collect();
                    all.push(json!({"size": orbit.len(), "tableaux": tableaux, "cdes": cdes}));
                }
                writeln!(out, "{}", Value::Array(all))?;
            } else {
                for (i, orbit) in orbits.iter().enumerate() {
                    writeln!(out, "orbit {} (size {})", i + 1, orbit.len())?;
                    for p in orbit {
                        writeln!(out, "  {}  cDes {}", tableau_compact(p), cdes_boxed(p)?)?;
                    }
                }
            }
        }
        Verb::Syt {
            shape,
            inner,
            boxed,
            count,
        } => {
            let outer: Partition = shape
                .parse()
                .with_context(|| format!("invalid partition `{shape}`"))?;
            let shape = match inner {
                Some(mu) => {
                    let mu: Partition = mu
                        .parse()
                        .with_context(|| format!("invalid partition `{mu}`"))?;
                    Shape::skew(outer, mu)?
                }
                None if *boxed => Shape::boxed(outer)?,
                None => Shape::straight(outer),
            };
            let all = enumerate_syt(&shape);
            if *count {
                writeln!(out, "{}", all.len())?;
            } else if json {
                writeln!(
                    out,
                    "{}",
                    Value::Array(all.iter().map(tableau_json).collect())
                )?;
            } else {
                for t in &all {
                    writeln!(out, "{}", tableau_compact(t))?;
                }
            }
        }
        Verb::Rsk { perm } => {
            let pi = perm
                .parse()
                .map_err(|e| anyhow::anyhow!("invalid permutation `{perm}`: {e}"))?;
            let (p, q) = rsk(&pi);
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"P": tableau_json(&p), "Q": tableau_json(&q)})
                )?;
            } else {
                write!(out, "P:\n{}Q:\n{}", p.to_ascii(), q.to_ascii())?;
            }
        }
        Verb::Verify {
            suite,
            nmax,
            allow_large,
            seed,
        } => {
            if *nmax < 2 {
                bail!("--nmax must be at least 2");
            }
            if *nmax > NMAX_CAP && !allow_large {
                bail!("--nmax {nmax} exceeds {NMAX_CAP}; pass --allow-large to accept the runtime");
            }
            let reports = suites::run(*suite, *nmax, *seed);
            if json {
                let value = if reports.len() == 1 {
                    serde_json::to_value(&reports[0])?
                } else {
                    serde_json::to_value(&reports)?
                };
                writeln!(out, "{value}")?;
            } else {
                for report in &reports {
                    writeln!(
                        out,
                        "{} (n ≤ {}): {}",
                        report.suite, report.nmax, report.statement
                    )?;
                    for c in &report.checks {
                        let mark = if c.pass { "PASS" } else { "FAIL" };
                        write!(out, "  {mark}  {} [{}]", c.name, c.scope)?;
                        if let Some(ce) = &c.counterexample {
                            write!(out, " counterexample: {ce}")?;
                        }
                        if let Some(w) = &c.witness {
                            write!(out, " witness: {w}")?;
                        }
                        writeln!(out)?;
                    }
                    let passed = report.checks.iter().filter(|c| c.pass).count();
                    writeln!(out, "  {passed}/{} checks passed", report.checks.len())?;
                }
            }
            if !reports.iter().all(suites::Report::passed) {
                return Ok(Status::False);
            }
        }
    }
    Ok(Status::Ok)
}
