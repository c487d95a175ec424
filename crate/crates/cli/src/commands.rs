//! Subcommand implementations. Each returns the process exit code or an
//! error, which the caller reports with exit code 2.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use maxwell_core::constitutive::{moving_relations, MediaSpec};
use maxwell_core::fields::Units;
use maxwell_core::linalg::CMat3;
use maxwell_core::maxwell::{
    media_plane_wave, plane_wave, residual_media_uniform, residual_two_sector, Helicity,
    NoSource, PlaneWaveSpec,
};
use maxwell_core::sampling::sample_points;
use maxwell_core::so3c::{boost, rotation, BoostSpec};
use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::io::{load_matrix, load_scenario, save_scenario, scenario_json};
use crate::report::format_number;
use crate::suites::{run_suite, Suite, ROUNDOFF, TRANSFORMED};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn exit_code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes()).map_err(io_error(Path::new("<stdout>")))
}

pub fn verify(suite: &str, seed: u64, json: bool, out: &mut dyn std::io::Write) -> CliResult<i32> {
    let suite = Suite::parse(suite).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown suite {suite:?}; expected one of {}",
            Suite::NAMES.join(", ")
        ))
    })?;
    let report = run_suite(suite, seed);
    let text = if json {
        report.to_json()
    } else {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        report.to_text(Some(now))
    };
    emit(out, &text)?;
    Ok(exit_code(report.pass))
}

pub fn boost_scenario(
    rapidity: f64,
    axis: [f64; 3],
    input: &Path,
    output: Option<&Path>,
    out: &mut dyn std::io::Write,
) -> CliResult<i32> {
    let spec = BoostSpec::new(rapidity, Vector3::from(axis))?;
    let scenario = load_scenario(input)?.with_frame(&boost(&spec));
    scenario.build()?;
    match output {
        Some(p) => save_scenario(&scenario, p)?,
        None => emit(out, &scenario_json(&scenario))?,
    }
    Ok(EXIT_PASS)
}

pub fn rotate_scenario(
    angle: f64,
    axis: [f64; 3],
    input: &Path,
    output: Option<&Path>,
    out: &mut dyn std::io::Write,
) -> CliResult<i32> {
    let scenario = load_scenario(input)?.with_frame(&rotation(angle, Vector3::from(axis))?);
    scenario.build()?;
    match output {
        Some(p) => save_scenario(&scenario, p)?,
        None => emit(out, &scenario_json(&scenario))?,
    }
    Ok(EXIT_PASS)
}

pub struct PlaneWaveArgs {
    pub eps: f64,
    pub mu: f64,
    pub k: [f64; 3],
    pub helicity: Helicity,
    pub amplitude: f64,
    pub check: bool,
    pub points: usize,
    pub seed: u64,
}

pub fn planewave(args: &PlaneWaveArgs, out: &mut dyn std::io::Write) -> CliResult<i32> {
    let units = Units::natural();
    let media = MediaSpec::uniform(args.eps, args.mu)?;
    let k = Vector3::from(args.k);
    let spec = PlaneWaveSpec::circular(k, args.helicity, args.amplitude, media.clone(), units)?;
    let wave = plane_wave(&spec)?;
    let mut text = String::new();
    let _ = writeln!(text, "helicity: {:+}", args.helicity.sign());
    let _ = writeln!(text, "k: {}", join(&args.k.map(format_number)));
    let _ = writeln!(text, "omega: {}", format_number(wave.omega));
    let _ = writeln!(text, "phase speed: {}", format_number(spec.phase_speed()?));
    let pol: Vec<String> = spec
        .polarization
        .iter()
        .map(|z| format!("({}, {})", format_number(z.re), format_number(z.im)))
        .collect();
    let _ = writeln!(text, "polarization: {}", pol.join(" "));
    let mut pass = true;
    if args.check {
        let pts = sample_points(args.points, args.seed);
        let single = residual_media_uniform(&wave, &NoSource, &pts, &media, &units)?.max_abs();
        let (_, m, n) = media_plane_wave(k, args.helicity, args.amplitude, &media, &units)?;
        let two = residual_two_sector(&m, &n, &NoSource, &pts, &units)?.max_abs();
        let single_ok = single <= ROUNDOFF;
        let two_ok = two <= TRANSFORMED;
        pass = single_ok && two_ok;
        let _ = writeln!(
            text,
            "{}  residual (single column, x0 = c't): {}  tol={}",
            if single_ok { "PASS" } else { "FAIL" },
            format_number(single),
            format_number(ROUNDOFF)
        );
        let _ = writeln!(
            text,
            "{}  residual (two-sector, x0 = ct): {}  tol={}",
            if two_ok { "PASS" } else { "FAIL" },
            format_number(two),
            format_number(TRANSFORMED)
        );
    }
    emit(out, &text)?;
    Ok(exit_code(pass))
}

fn join(items: &[String]) -> String {
    items.join(",")
}

pub fn residual(
    input: &Path,
    points: usize,
    seed: u64,
    tolerance: f64,
    csv: Option<&Path>,
    out: &mut dyn std::io::Write,
) -> CliResult<i32> {
    if points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let scenario = load_scenario(input)?;
    let pts = sample_points(points, seed);
    let res = scenario.residual(&pts)?;
    if let Some(path) = csv {
        let mut text = String::from("x0,x1,x2,x3,res0_re,res0_im,res1_re,res1_im,res2_re,res2_im,res3_re,res3_im\n");
        for (x, r) in res.points.iter().zip(&res.values) {
            let mut row: Vec<String> = x.iter().map(|v| format_number(*v)).collect();
            for z in r.iter() {
                row.push(format_number(z.re));
                row.push(format_number(z.im));
            }
            text.push_str(&row.join(","));
            text.push('\n');
        }
        fs::write(path, text).map_err(io_error(path))?;
    }
    let max = res.max_abs();
    let pass = max <= tolerance;
    emit(
        out,
        &format!(
            "{}  max residual over {} points: {}  tol={}\n",
            if pass { "PASS" } else { "FAIL" },
            res.len(),
            format_number(max),
            format_number(tolerance)
        ),
    )?;
    Ok(exit_code(pass))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Json,
    Csv,
}

pub struct ConstitutiveArgs {
    pub eps: f64,
    pub mu: f64,
    pub alpha_m: Option<PathBuf>,
    pub beta_m: Option<PathBuf>,
    pub boost: [f64; 4],
    pub emit: Emit,
}

#[derive(Serialize)]
struct Blocks {
    media: MediaSpec,
    rapidity: f64,
    axis: [f64; 3],
    /// `2h = A f + B f*`
    forward_a: [[[f64; 2]; 3]; 3],
    forward_b: [[[f64; 2]; 3]; 3],
    /// `2f = C h + D h*`
    inverse_c: [[[f64; 2]; 3]; 3],
    inverse_d: [[[f64; 2]; 3]; 3],
}

fn rows(m: &CMat3) -> [[[f64; 2]; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| [m[(i, j)].re, m[(i, j)].im]))
}

pub fn constitutive(args: &ConstitutiveArgs, out: &mut dyn std::io::Write) -> CliResult<i32> {
    let media = if args.alpha_m.is_none() && args.beta_m.is_none() {
        MediaSpec::uniform(args.eps, args.mu)?
    } else {
        if args.mu.is_nan() || args.mu <= 0.0 {
            return Err(maxwell_core::Error::InvalidMedia(format!("mu must be positive, got {}", args.mu)).into());
        }
        let load = |p: &Option<PathBuf>| -> CliResult<Matrix3<f64>> {
            p.as_deref().map(load_matrix).unwrap_or(Ok(Matrix3::zeros()))
        };
        MediaSpec::general(
            Matrix3::identity() * args.eps,
            Matrix3::identity() / args.mu,
            load(&args.alpha_m)?,
            load(&args.beta_m)?,
        )?
    };
    let [b, nx, ny, nz] = args.boost;
    let spec = BoostSpec::new(b, Vector3::new(nx, ny, nz))?;
    let rel = moving_relations(&media, &boost(&spec))?;
    let text = match args.emit {
        Emit::Json => {
            let blocks = Blocks {
                media,
                rapidity: b,
                axis: [nx, ny, nz],
                forward_a: rows(&rel.forward.a),
                forward_b: rows(&rel.forward.b),
                inverse_c: rows(&rel.inverse.a),
                inverse_d: rows(&rel.inverse.b),
            };
            let mut t = serde_json::to_string_pretty(&blocks).expect("blocks serialize");
            t.push('\n');
            t
        }
        Emit::Csv => {
            let mut t = String::from("block,row,col,re,im\n");
            for (name, m) in [
                ("forward_a", &rel.forward.a),
                ("forward_b", &rel.forward.b),
                ("inverse_c", &rel.inverse.a),
                ("inverse_d", &rel.inverse.b),
            ] {
                for i in 0..3 {
                    for j in 0..3 {
                        let _ = writeln!(
                            t,
                            "{name},{i},{j},{},{}",
                            format_number(m[(i, j)].re),
                            format_number(m[(i, j)].im)
                        );
                    }
                }
            }
            t
        }
    };
    emit(out, &text)?;
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut Vec<u8>) -> CliResult<i32>) -> (i32, String) {
        let mut buf = Vec::new();
        let code = f(&mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        let mut buf = Vec::new();
        assert!(matches!(verify("nosuch", 1, true, &mut buf), Err(CliError::Usage(_))));
    }

    #[test]
    fn planewave_check_passes_in_media() {
        let args = PlaneWaveArgs {
            eps: 2.0,
            mu: 3.0,
            k: [0.0, 0.0, 1.0],
            helicity: Helicity::Positive,
            amplitude: 1.0,
            check: true,
            points: 20,
            seed: 1,
        };
        let (code, text) = run(|b| planewave(&args, b));
        assert_eq!(code, 0, "{text}");
        // omega = |k| / sqrt(eps mu)
        assert!(text.contains(&format!("omega: {}", format_number(1.0 / 6f64.sqrt()))));
    }

    #[test]
    fn constitutive_vacuum_blocks() {
        let args = ConstitutiveArgs {
            eps: 1.0,
            mu: 1.0,
            alpha_m: None,
            beta_m: None,
            boost: [0.7, 0.0, 0.0, 1.0],
            emit: Emit::Json,
        };
        let (code, text) = run(|b| constitutive(&args, b));
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["forward_a"][0][0], serde_json::json!([2.0, 0.0]));
        assert_eq!(v["forward_b"][1][2], serde_json::json!([0.0, 0.0]));
    }

    #[test]
    fn constitutive_csv_layout() {
        let args = ConstitutiveArgs {
            eps: 2.0,
            mu: 1.0,
            alpha_m: None,
            beta_m: None,
            boost: [0.0, 1.0, 0.0, 0.0],
            emit: Emit::Csv,
        };
        let (_, text) = run(|b| constitutive(&args, b));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 4 * 9);
        // 2h = 3f + f* at rest
        assert_eq!(lines[1], format!("forward_a,0,0,{},{}", format_number(3.0), format_number(0.0)));
        assert_eq!(lines[10], format!("forward_b,0,0,{},{}", format_number(1.0), format_number(0.0)));
    }
}
