//! Seeded instance generation with the benchmark naming conventions.
//!
//! Deltas and densities are carried as the raw strings the user typed so
//! the file name reproduces them verbatim (`0.30` stays `0.30`), while the
//! parsed value drives the generator.

use std::fs;
use std::path::{Path, PathBuf};

use regret_core::rrsp::{
    generate_coco, generate_karasan, write_rrsp, GridParams, KarasanParams,
};
use regret_core::rsc::{
    generate_beasley, generate_kz, generate_montemanni, generate_synthetic_scp, parse_orlib,
    write_orlib, write_rsc, ScpBase,
};

fn parse_fraction(raw: &str, flag: &str) -> Result<f64, String> {
    raw.parse::<f64>()
        .map_err(|_| format!("{flag} {raw:?} is not a number"))
}

fn write_named(out_dir: &Path, name: &str, contents: &str) -> Result<PathBuf, String> {
    fs::create_dir_all(out_dir)
        .map_err(|e| format!("creating {}: {e}", out_dir.display()))?;
    let path = out_dir.join(name);
    fs::write(&path, contents).map_err(|e| format!("writing {}: {e}", path.display()))?;
    Ok(path)
}

fn load_base(scp: &Path) -> Result<ScpBase, String> {
    let text = fs::read_to_string(scp).map_err(|e| format!("{}: {e}", scp.display()))?;
    parse_orlib(&text).map_err(|e| format!("{}: {e}", scp.display()))
}

fn set_of(scp: &Path) -> String {
    scp.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "scp".into())
}

pub fn karasan(
    v: usize,
    phi: i64,
    delta_raw: &str,
    omega: usize,
    seed: u64,
    out: &Path,
) -> Result<PathBuf, String> {
    let delta = parse_fraction(delta_raw, "--delta")?;
    let params = KarasanParams {
        vertices: v,
        phi_max: phi,
        delta,
        width: omega,
    };
    let g = generate_karasan(&params, seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("K-{v}-{phi}-{delta_raw}-{omega}_s{seed}.rrsp"),
        &write_rrsp(&g),
    )
}

pub fn coco(
    rows: usize,
    cols: usize,
    phi: i64,
    delta_raw: &str,
    seed: u64,
    out: &Path,
) -> Result<PathBuf, String> {
    let delta = parse_fraction(delta_raw, "--delta")?;
    let params = GridParams {
        rows,
        cols,
        phi_max: phi,
        delta,
    };
    let g = generate_coco(&params, seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("G-{rows}x{cols}-{phi}-{delta_raw}_s{seed}.rrsp"),
        &write_rrsp(&g),
    )
}

pub fn beasley(scp: &Path, delta_raw: &str, seed: u64, out: &Path) -> Result<PathBuf, String> {
    let delta = parse_fraction(delta_raw, "--delta")?;
    let base = load_base(scp)?;
    let p = generate_beasley(&base, delta, seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("B.{}-{delta_raw}_s{seed}.rsc", set_of(scp)),
        &write_rsc(&p),
    )
}

pub fn montemanni(scp: &Path, seed: u64, out: &Path) -> Result<PathBuf, String> {
    let base = load_base(scp)?;
    let p = generate_montemanni(base.matrix(), seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("M.{}-1000_s{seed}.rsc", set_of(scp)),
        &write_rsc(&p),
    )
}

pub fn kz(scp: &Path, seed: u64, out: &Path) -> Result<PathBuf, String> {
    let base = load_base(scp)?;
    let p = generate_kz(base.matrix(), seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("KZ.{}-1000_s{seed}.rsc", set_of(scp)),
        &write_rsc(&p),
    )
}

pub fn synthetic_sc(
    rows: usize,
    cols: usize,
    density_raw: &str,
    phi: i64,
    seed: u64,
    out: &Path,
) -> Result<PathBuf, String> {
    let density = parse_fraction(density_raw, "--density")?;
    let base =
        generate_synthetic_scp(rows, cols, density, phi, seed).map_err(|e| e.to_string())?;
    write_named(
        out,
        &format!("S-{rows}x{cols}-{density_raw}-{phi}_s{seed}.scp"),
        &write_orlib(&base),
    )
}
