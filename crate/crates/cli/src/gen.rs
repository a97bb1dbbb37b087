use std::path::PathBuf;

use anyhow::{bail, Result};
use mps_core::graph::RandomGraphSpec;
use mps_core::{gen_fig1_fixture, gen_random, gen_random_biconnected, write_edge_list};
use serde_json::json;

use crate::args::{Fixture, GenArgs};
use crate::io::{self, EXIT_OK};

pub fn run(a: &GenArgs) -> Result<i32> {
    match a.fixture {
        Some(Fixture::Fig1) => fig1(a),
        None => random(a),
    }
}

fn random(a: &GenArgs) -> Result<i32> {
    let spec = RandomGraphSpec {
        n: a.n,
        edge_prob: a.p,
        weight_range: (a.wmin, a.wmax),
        seed: a.seed,
    };
    let g = if a.biconnected {
        gen_random_biconnected(&spec)?
    } else {
        gen_random(&spec)?
    };
    let header = format!(
        "mps gen --n {} --p {} --wmin {} --wmax {} --seed {}{}",
        a.n,
        a.p,
        a.wmin,
        a.wmax,
        a.seed,
        if a.biconnected { " --biconnected" } else { "" }
    );
    let text = write_edge_list(&g, &[header]);
    match &a.out {
        Some(path) => io::write(path, &text)?,
        None => io::print_stdout(&text),
    }
    Ok(EXIT_OK)
}

fn fig1(a: &GenArgs) -> Result<i32> {
    let Some(s) = a.s else {
        bail!("--fixture fig1 needs --s");
    };
    let f = gen_fig1_fixture(a.n, s)?;
    let prefix = a.out.clone().unwrap_or_else(|| PathBuf::from("fig1"));
    let with = |suffix: &str| {
        let mut p = prefix.clone().into_os_string();
        p.push(suffix);
        PathBuf::from(p)
    };
    let origin = format!("mps gen --fixture fig1 --n {} --s {}", a.n, s);
    io::write(&with(".g.el"), &write_edge_list(&f.g, &[format!("{origin}: G")]))?;
    io::write(
        &with(".h.el"),
        &write_edge_list(&f.h.to_graph(), &[format!("{origin}: H = G minus uv")]),
    )?;
    let record = json!({ "u": f.u, "v": f.v, "n": f.n, "s": f.s, "scale": f.scale });
    io::write(
        &with(".uv.json"),
        &format!("{}\n", serde_json::to_string_pretty(&record)?),
    )?;
    Ok(EXIT_OK)
}
