//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{run_axiom_suite, AxiomConfig};
use crate::error::{Error, Result};
use crate::hilbert::{
    affine_consistency_check, default_consistency_samples, euler_specialization, generate_surface_data, global_series,
    hodge_deligne_series, kapranov_zeta, local_series, LocalHilbertData, VarietyClass,
};
use crate::json::{self, EulerProductJson, PolynomialJson, SeriesJson};
use crate::oracles::{
    coefficient_formula_count, finite_power_enumerate, partition_power_counts, partitions_enumerate,
    punctual_surface_class_oracle, WeightProfile,
};
use crate::parse::{parse_expression, parse_list, parse_series};
use crate::poly::Polynomial;
use crate::power::{assemble, exp_map, factor, log_map, pow, EulerProduct};
use crate::ring::{Ring, RingDescriptor};
use crate::sampling::{seed_from_env, Shape};
use crate::series::Series;

pub const MAX_TRUNCATION: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "motivic-power", version, about = "Power structures and Hilbert-scheme generating series")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Comma-separated ring variables; empty means the integers.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    /// Allow negative exponents of the ring variables.
    #[arg(long, global = true)]
    pub laurent: bool,
    /// Truncation order N (series are known modulo t^(N+1)).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(0..=MAX_TRUNCATION as u64))]
    pub truncate: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    Euler,
    Hodge,
}

#[derive(Args, Debug, Clone)]
pub struct SeriesInput {
    /// Series as an expression in t, e.g. "1+u*t+t^2".
    #[arg(long, conflicts_with = "series_json")]
    pub series: Option<String>,
    /// Series as a JSON file.
    #[arg(long)]
    pub series_json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kapranov zeta function (1-t)^(-[X]).
    Zeta {
        #[arg(long)]
        class: String,
    },
    /// Power A(t)^m of a unital series.
    Pow {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long)]
        exponent: String,
    },
    /// Euler-product exponents b_i with A(t) = prod (1-t^i)^(-b_i).
    Factor {
        #[command(flatten)]
        input: SeriesInput,
    },
    /// Multiplies out prod (1-t^i)^(-b_i).
    Assemble {
        /// Comma-separated b_1, b_2, ...
        #[arg(long, conflicts_with = "exponents_json")]
        exponents: Option<String>,
        #[arg(long)]
        exponents_json: Option<PathBuf>,
    },
    /// Exp(P_1 t + P_2 t^2 + ...) = prod (1-t^k)^(-P_k).
    Exp {
        /// Comma-separated P_1, P_2, ...
        #[arg(long)]
        terms: String,
    },
    /// Inverse of exp.
    Log {
        #[command(flatten)]
        input: SeriesInput,
    },
    /// Generating series of Hilbert schemes of points on X.
    Hilbert {
        #[arg(long)]
        dim: u32,
        /// [X] in L, or e_X in u, v with --specialize hodge.
        #[arg(long)]
        class: String,
        #[arg(long, value_enum)]
        specialize: Option<Specialization>,
        /// Local punctual series for the dimension (required for d >= 3).
        #[arg(long)]
        local_data: Option<PathBuf>,
    },
    /// Affine-space consistency of the Hilbert series for d = 1, 2.
    Consistency {
        #[arg(long)]
        dim: u32,
    },
    /// Compares the brute-force oracles with the power structure.
    OracleCheck {
        #[arg(long, default_value_t = 4)]
        max_points: u32,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 3)]
        max_size: u32,
    },
    /// Randomized check of the power-structure properties 1-7.
    Axioms {
        /// Falls back to MOTIVIC_POWER_SEED, then a fixed default.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[arg(long, default_value_t = 3)]
        max_coef: i64,
    },
    /// Regenerates the punctual surface data from the partition oracle.
    LocalData {
        /// Compare with an existing file instead of printing; exit 1 on drift.
        #[arg(long)]
        check: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn ring_of(common: &Common, default: &[&str], default_laurent: bool) -> Result<Ring> {
    match &common.vars {
        Some(v) => {
            let names: Vec<&str> = v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            RingDescriptor::new(&names, common.laurent)
        }
        None => RingDescriptor::new(default, common.laurent || default_laurent),
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn read_series(input: &SeriesInput, ring: &Ring, order: usize) -> Result<Series> {
    match (&input.series, &input.series_json) {
        (Some(src), _) => parse_series(src, ring, order),
        (None, Some(path)) => json::series_from_json(&read_file(path)?),
        (None, None) => Err(Error::Json("one of --series or --series-json is required".into())),
    }
}

fn pad(ring: &Ring, mut v: Vec<Polynomial>, order: usize) -> Vec<Polynomial> {
    v.resize(order, Polynomial::zero(ring));
    v
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Printer<'_> {
    fn io(&mut self, r: std::io::Result<()>) -> Result<()> {
        r.map_err(|e| Error::Json(format!("write failed: {e}")))
    }

    fn series(&mut self, s: &Series) -> Result<()> {
        let r = match self.format {
            Format::Json => writeln!(self.out, "{}", serde_json::to_string(&SeriesJson::from(s))?),
            Format::Text => s.coeffs().iter().enumerate().try_for_each(|(n, c)| writeln!(self.out, "t^{n}\t{c}")),
        };
        self.io(r)
    }

    fn exponents(&mut self, e: &EulerProduct) -> Result<()> {
        let r = match self.format {
            Format::Json => writeln!(self.out, "{}", serde_json::to_string(&EulerProductJson::from(e))?),
            Format::Text => {
                e.exponents().iter().enumerate().try_for_each(|(i, b)| writeln!(self.out, "b_{}\t{b}", i + 1))
            }
        };
        self.io(r)
    }

    fn polys(&mut self, label: &str, v: &[Polynomial]) -> Result<()> {
        let r = match self.format {
            Format::Json => {
                let arr: Vec<PolynomialJson> = v.iter().map(Into::into).collect();
                writeln!(self.out, "{}", serde_json::to_string(&arr)?)
            }
            Format::Text => v.iter().enumerate().try_for_each(|(i, p)| writeln!(self.out, "{label}_{}\t{p}", i + 1)),
        };
        self.io(r)
    }

    fn line(&mut self, s: &str) -> Result<()> {
        let r = writeln!(self.out, "{s}");
        self.io(r)
    }
}

fn check_line(p: &mut Printer<'_>, ok: bool, name: &str, detail: &str) -> Result<bool> {
    let status = if ok { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        p.line(&format!("{status} {name}"))?;
    } else {
        p.line(&format!("{status} {name}: {detail}"))?;
    }
    Ok(ok)
}

/// Runs a parsed command; `Ok(false)` means a check failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let common = &cli.common;
    let order = common.truncate.unwrap_or(10) as usize;
    let mut p = Printer { out, format: common.format };
    match &cli.command {
        Command::Zeta { class } => {
            let ring = ring_of(common, &[], false)?;
            p.series(&kapranov_zeta(&parse_expression(class, &ring)?, order))?;
        }
        Command::Pow { input, exponent } => {
            let ring = ring_of(common, &[], false)?;
            let s = read_series(input, &ring, order)?;
            let m = parse_expression(exponent, s.ring())?;
            p.series(&pow(&s, &m)?)?;
        }
        Command::Factor { input } => {
            let ring = ring_of(common, &[], false)?;
            p.exponents(&factor(&read_series(input, &ring, order)?)?)?;
        }
        Command::Assemble { exponents, exponents_json } => {
            let e = match (exponents, exponents_json) {
                (Some(src), _) => {
                    let ring = ring_of(common, &[], false)?;
                    let mut v = parse_list(src, &ring)?;
                    v.truncate(order);
                    EulerProduct::new(&ring, pad(&ring, v, order))?
                }
                (None, Some(path)) => json::euler_product_from_json(&read_file(path)?)?,
                (None, None) => return Err(Error::Json("one of --exponents or --exponents-json is required".into())),
            };
            p.series(&assemble(&e))?;
        }
        Command::Exp { terms } => {
            let ring = ring_of(common, &[], false)?;
            let mut v = parse_list(terms, &ring)?;
            v.truncate(order);
            p.series(&exp_map(&ring, &pad(&ring, v, order))?)?;
        }
        Command::Log { input } => {
            let ring = ring_of(common, &[], false)?;
            p.polys("P", &log_map(&read_series(input, &ring, order)?)?)?;
        }
        Command::Hilbert { dim, class, specialize, local_data } => {
            let user = local_data.as_ref().map(|f| LocalHilbertData::from_json(&read_file(f)?)).transpose()?;
            let local = local_series(*dim, order, user.as_ref())?;
            match specialize {
                Some(Specialization::Hodge) => {
                    let ring = ring_of(common, &["u", "v"], false)?;
                    let x = VarietyClass::new(parse_expression(class, &ring)?, *dim)?;
                    p.series(&hodge_deligne_series(&x, &local, order)?)?;
                }
                _ => {
                    let ring = ring_of(common, &["L"], true)?;
                    let x = VarietyClass::new(parse_expression(class, &ring)?, *dim)?;
                    let h = global_series(&x, &local, order)?;
                    if *specialize == Some(Specialization::Euler) {
                        p.series(&euler_specialization(&h)?)?;
                    } else {
                        p.series(&h)?;
                    }
                }
            }
        }
        Command::Consistency { dim } => {
            let report = affine_consistency_check(*dim, order, &default_consistency_samples(*dim))?;
            let mut ok = true;
            for (name, passed) in &report.checks {
                ok &= check_line(&mut p, *passed, name, "")?;
            }
            return Ok(ok);
        }
        Command::OracleCheck { max_points, max_weight, max_size } => {
            return oracle_check(&mut p, *max_points, *max_weight, *max_size, order);
        }
        Command::Axioms { seed, trials, max_degree, max_coef } => {
            let ring = ring_of(common, &["u", "v"], false)?;
            let cfg = AxiomConfig {
                seed: seed.unwrap_or_else(seed_from_env),
                trials: *trials,
                order,
                ring,
                shape: Shape::new(*max_degree, -*max_coef, *max_coef),
            };
            let report = run_axiom_suite(&cfg)?;
            p.line(&format!("seed {} trials {} order {} ring {}", cfg.seed, cfg.trials, cfg.order, cfg.ring))?;
            for prop in &report.properties {
                let detail = match &prop.first_failure {
                    None => format!("{}/{} hold", prop.checked, prop.checked),
                    Some(f) => format!("{} of {} fail; first {f}", prop.failures, prop.checked),
                };
                check_line(&mut p, prop.failures == 0, prop.name, &detail)?;
            }
            return Ok(report.passed());
        }
        Command::LocalData { check } => {
            let order = common.truncate.unwrap_or(crate::oracles::MAX_PUNCTUAL_N as u64) as usize;
            let data = generate_surface_data(order)?;
            match check {
                None => p.line(data.to_json().trim_end())?,
                Some(path) => {
                    let existing = read_file(path)?;
                    let same = existing == data.to_json();
                    return check_line(&mut p, same, &format!("{} matches the partition oracle", path.display()), "");
                }
            }
        }
    }
    Ok(true)
}

fn oracle_check(p: &mut Printer<'_>, max_points: u32, max_weight: u32, max_size: u32, order: usize) -> Result<bool> {
    let z = RingDescriptor::integers();
    let mut profiles = 0usize;
    let mut failure: Option<String> = None;
    let mut sizes = vec![0u32; max_weight as usize];
    'outer: loop {
        for m in 0..=max_points {
            let profile = WeightProfile::new(sizes.clone(), m);
            let enumerated = finite_power_enumerate(&profile, order)?;
            let formula = coefficient_formula_count(&profile, order)?;
            let mut a = vec![Polynomial::one(&z)];
            a.extend((1..=order).map(|i| Polynomial::constant(&z, *sizes.get(i - 1).unwrap_or(&0))));
            let powered = pow(&Series::new(&z, a)?, &Polynomial::constant(&z, m))?;
            let via_pow: Vec<u64> = powered
                .coeffs()
                .iter()
                .map(|c| c.as_constant().and_then(|c| c.to_i64()).unwrap_or(-1) as u64)
                .collect();
            profiles += 1;
            if enumerated != formula || enumerated != via_pow {
                failure = Some(format!(
                    "sizes {sizes:?}, m = {m}: enumeration {enumerated:?}, formula {formula:?}, pow {via_pow:?}"
                ));
                break 'outer;
            }
        }
        let mut pos = 0;
        loop {
            if pos == sizes.len() {
                break 'outer;
            }
            sizes[pos] += 1;
            if sizes[pos] <= max_size {
                break;
            }
            sizes[pos] = 0;
            pos += 1;
        }
    }
    let mut ok = check_line(
        p,
        failure.is_none(),
        "enumeration = configuration formula = pow",
        &failure.unwrap_or_else(|| format!("{profiles} profiles")),
    )?;

    let n = order.min(crate::oracles::MAX_PUNCTUAL_N as usize);
    let local = local_series(2, n, None)?;
    let mut bad = None;
    for k in 0..=n {
        let expected = punctual_surface_class_oracle(k as u32)?;
        if *local.series.coeff(k) != expected {
            bad = Some(format!("t^{k}: {} vs {expected}", local.series.coeff(k)));
            break;
        }
        if expected.eval_at_ones() != crate::int::Integer::from(partitions_enumerate(k as u32)?.len() as u64) {
            bad = Some(format!("t^{k}: value at L=1 is not p({k})"));
            break;
        }
    }
    ok &= check_line(p, bad.is_none(), "surface local series = partition sum", &bad.unwrap_or_default())?;

    let counts = partition_power_counts(1, n)?;
    let euler = euler_specialization(&local.series)?;
    let same = euler
        .coeffs()
        .iter()
        .zip(&counts)
        .all(|(c, k)| c.as_constant().map(|c| c.to_bigint()) == Some(k.clone().into()));
    ok &= check_line(p, same, "chi of surface local series = partition numbers", "")?;
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["motivic-power"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bad_flags_exit_2() {
        let (code, _, err) = run_capture(&["pow", "--bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("--bogus"));
        let (code, _, _) = run_capture(&["zeta", "--class", "1", "--truncate", "201"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn computation_errors_exit_1() {
        let (code, _, err) = run_capture(&["zeta", "--class", "1+w", "--vars", "u,v"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown variable w"));
    }
}
