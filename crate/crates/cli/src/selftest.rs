use std::collections::HashSet;
use std::fmt::Write as _;

use grasscode::{BigUint, Grassmannian, HybridConfig, Matrix, Scheme, Subspace};
use serde_json::json;

use crate::{Cli, CliError, CliResult};

const PARAMS: [(usize, usize, u32); 6] = [
    (4, 2, 2),
    (5, 2, 2),
    (5, 3, 2),
    (6, 3, 2),
    (7, 3, 2),
    (4, 2, 3),
];

/// Decodes every index, re-encodes it, and checks that the subspaces are
/// distinct and, for the pure schemes, increasing under the comparator.
fn sweep(g: &Grassmannian, scheme: Scheme) -> Result<usize, String> {
    let total: usize = g
        .total()
        .clone()
        .try_into()
        .map_err(|_| "total too large for a sweep".to_string())?;
    let mut seen = HashSet::with_capacity(total);
    let mut prev: Option<Subspace> = None;
    for i in 0..total {
        let i = BigUint::from(i);
        let x = g.decode(&i, scheme).map_err(|e| e.to_string())?;
        if !x.rref().is_rref() {
            return Err(format!("decode({i}) is not in RREF"));
        }
        let back = g.encode(&x, scheme).map_err(|e| e.to_string())?;
        if back != i {
            return Err(format!("encode(decode({i})) = {back}"));
        }
        if let (Some(p), false) = (&prev, matches!(scheme, Scheme::Hybrid(_))) {
            if !g.compare(p, &x, scheme).map_err(|e| e.to_string())?.is_lt() {
                return Err(format!("decode({i}) does not follow its predecessor"));
            }
        }
        if !seen.insert(x.rref().clone()) {
            return Err(format!("decode({i}) repeats an earlier subspace"));
        }
        prev = Some(x);
    }
    Ok(total)
}

fn worked_example() -> Result<(), String> {
    let g = Grassmannian::new(6, 3, 2).unwrap();
    let m =
        Matrix::from_rows(&[[0, 1, 1, 0, 0, 1], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 1]]).unwrap();
    let x = Subspace::from_rref(m, 2).unwrap();
    let index = g.encode_extended(&x).map_err(|e| e.to_string())?;
    if index != BigUint::from(928u32) {
        return Err(format!("extended index {index}, expected 928"));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> CliResult<()> {
    let mut cases = vec![("worked example".to_string(), worked_example().map(|()| 1))];
    for (n, k, q) in PARAMS {
        let g = Grassmannian::new(n, k, q)?;
        let mut schemes = vec![
            Scheme::Ferrers,
            Scheme::Extended,
            Scheme::Hybrid(HybridConfig::default_for(&g)),
        ];
        if (n, k, q) == (5, 2, 2) {
            for threshold in 0..=7 {
                let scheme = Scheme::Hybrid(HybridConfig { threshold });
                if !schemes.contains(&scheme) {
                    schemes.push(scheme);
                }
            }
        }
        for scheme in schemes {
            cases.push((format!("G_{q}({n},{k}) {scheme}"), sweep(&g, scheme)));
        }
    }
    let mut text = String::new();
    let mut values = Vec::new();
    let mut failures = 0;
    for (name, outcome) in &cases {
        match outcome {
            Ok(count) => {
                writeln!(text, "ok   {name}: {count}").unwrap();
                values.push(json!({ "case": name, "ok": true, "checked": count }));
            }
            Err(msg) => {
                failures += 1;
                writeln!(text, "FAIL {name}: {msg}").unwrap();
                values.push(json!({ "case": name, "ok": false, "error": msg }));
            }
        }
    }
    if cli.json {
        println!("{}", json!({ "passed": failures == 0, "cases": values }));
    } else {
        print!("{text}");
    }
    if failures > 0 {
        return Err(CliError::Malformed(format!(
            "{failures} self-test case(s) failed"
        )));
    }
    Ok(())
}
