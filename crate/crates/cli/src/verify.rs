use std::fmt::Write as _;

use anyhow::Result;
use mps_core::ft::FaultGuard;
use mps_core::{
    is_b_hop_spanner, parse_stretch, residual_sparsity_certificate, stretch_to_f64,
    verify_fault_tolerance_with, verify_stretch, Cost,
};
use serde_json::json;

use crate::args::{VerifyArgs, VerifyKind};
use crate::io::{self, EXIT_OK, EXIT_VIOLATION};

pub fn run(a: &VerifyArgs) -> Result<i32> {
    let g = io::read_graph(&a.g, a.strict)?;
    let report_path = a
        .report
        .clone()
        .unwrap_or_else(|| io::sibling(&a.h, ".verify.csv"));
    let (ok, csv, summary) = match a.kind {
        VerifyKind::Multipath => {
            let h = io::read_subgraph(&g, &a.h, a.strict)?;
            let alpha = parse_stretch(&a.alpha)?;
            let r = verify_stretch(&g, &h, a.p, alpha, Cost::Finite(a.beta))?;
            let summary = json!({
                "kind": "multipath",
                "p": a.p,
                "alpha": stretch_to_f64(alpha),
                "beta": a.beta,
                "pairs": r.rows.len(),
                "violations": r.violations.len(),
                "worst_ratio": r.worst_ratio.to_f64(),
                "worst_pair": r.worst_pair,
                "additive_slack": r.additive_slack.finite(),
            });
            (r.passed(), r.to_csv(), summary)
        }
        VerifyKind::Hop => {
            let h = io::read_subgraph(&g, &a.h, a.strict)?;
            let s = parse_stretch(&a.s)?;
            let r = is_b_hop_spanner(&g, &h, a.b, s)?;
            let (u, v) = r.counterexample.map_or((String::new(), String::new()), |(u, v)| {
                (u.to_string(), v.to_string())
            });
            let csv = format!("b,s,ok,u,v\n{},{},{},{u},{v}\n", a.b, a.s, r.ok);
            let summary = json!({ "kind": "hop", "b": a.b, "s": stretch_to_f64(s), "ok": r.ok,
                "counterexample": r.counterexample });
            (r.ok, csv, summary)
        }
        VerifyKind::Ft => {
            let h = io::read_subgraph(&g, &a.h, a.strict)?;
            let s = parse_stretch(&a.s)?;
            let mut guard = FaultGuard::default();
            guard.max_n = io::guard_n(guard.max_n)?;
            let r = verify_fault_tolerance_with(&g, &h, a.r, s, guard)?;
            let (faults, u, v) = match &r.counterexample {
                Some((f, u, v)) => {
                    let f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
                    (f.join(" "), u.to_string(), v.to_string())
                }
                None => Default::default(),
            };
            let csv = format!(
                "r,s,fault_sets_checked,ok,fault_set,u,v\n{},{},{},{},{faults},{u},{v}\n",
                a.r, a.s, r.fault_sets_checked, r.ok
            );
            let summary = json!({ "kind": "ft", "r": a.r, "s": stretch_to_f64(s), "ok": r.ok,
                "fault_sets_checked": r.fault_sets_checked, "counterexample": r.counterexample });
            (r.ok, csv, summary)
        }
        VerifyKind::Certificate => {
            // the residual graph is checked on its own; g only fixes the vertex count
            let h = io::read_subgraph(&g, &a.h, a.strict)?;
            let r = residual_sparsity_certificate(&h.to_graph(), a.k)?;
            let mut csv = String::from("radius,center,ball_size,next_layer,edges_removed\n");
            for b in &r.removals {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{}",
                    b.radius, b.center, b.ball_size, b.next_layer, b.edges_removed
                );
            }
            let summary = json!({ "kind": "certificate", "k": a.k, "n": r.n, "edges": r.edges,
                "bound": r.bound, "hypothesis_holds": r.hypothesis_holds(), "witness": r.witness,
                "bound_holds": r.bound_holds, "removals_hold": r.removals_hold, "ok": r.holds() });
            (r.holds(), csv, summary)
        }
    };
    io::write(&report_path, &csv)?;
    io::print_json(&summary)?;
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}
