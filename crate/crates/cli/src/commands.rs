use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::time::Duration;

use grasscode::scaling::{doubling_grid, loglog_slope, measure};
use grasscode::text::{format_subspace, parse_subspaces};
use grasscode::{
    gaussian, subspace_distance, CodeBuild, Error, FieldTable, Grassmannian, LexicodeBuilder,
    PartitionCache, Scheme, Subspace,
};
use serde_json::{json, Value};

use crate::{parse_index, resolve_scheme, selftest, Cli, CliError, CliResult, Command, CountArgs};

fn read_stdin() -> CliResult<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

pub fn rref_json(x: &Subspace) -> Value {
    json!(x.rref().to_rows())
}

fn subspace_json(x: &Subspace) -> Value {
    json!({ "n": x.n(), "k": x.k(), "q": x.q(), "rref": rref_json(x) })
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Tableau rows right-aligned as in a Ferrers diagram.
fn tableaux_text(x: &Subspace) -> String {
    let rows = x.tableaux().rows_display();
    let width = rows.first().map_or(0, Vec::len);
    let mut s = String::new();
    for row in &rows {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(s, "{}{}", "  ".repeat(width - row.len()), cells.join(" ")).unwrap();
    }
    s
}

fn emit(cli: &Cli, text: String, value: Value) {
    if cli.json {
        println!("{value}");
    } else {
        print!("{text}");
    }
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Canonicalize => canonicalize(cli),
        Command::Encode(scheme) => encode(cli, scheme),
        Command::Decode {
            params,
            scheme,
            index,
        } => {
            let g = Grassmannian::new(params.n, params.k, params.q)?;
            let scheme = scheme.resolve(&g)?;
            let index = parse_index(index)?;
            let x = g.decode(&index, scheme)?;
            let mut value = subspace_json(&x);
            value["scheme"] = json!(scheme.to_string());
            value["index"] = json!(index.to_string());
            emit(cli, format_subspace(&x), value);
            Ok(())
        }
        Command::Distance => distance(cli),
        Command::Count(args) => count(cli, args),
        Command::Lexicode {
            params,
            d,
            order,
            threshold,
            limit,
            checkpoint,
            every,
        } => {
            let g = Grassmannian::new(params.n, params.k, params.q)?;
            let order = resolve_scheme(*order, *threshold, &g)?;
            let limit = limit.as_deref().map(parse_index).transpose()?;
            lexicode(cli, &g, *d, order, limit, checkpoint.as_deref(), *every)
        }
        Command::Selftest => selftest::run(cli),
        Command::Bench {
            q,
            start,
            steps,
            samples,
            min_ms,
        } => bench(cli, *q, *start, *steps, *samples, *min_ms),
    }
}

fn canonicalize(cli: &Cli) -> CliResult<()> {
    let subspaces = parse_subspaces(&read_stdin()?)?;
    let mut text = String::new();
    let mut values = Vec::new();
    for (i, x) in subspaces.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&format_subspace(x));
        writeln!(text, "v {}", bits(x.identifying_vector())).unwrap();
        text.push_str("tableaux\n");
        text.push_str(&tableaux_text(x));
        let mut value = subspace_json(x);
        value["identifying_vector"] = json!(bits(x.identifying_vector()));
        value["tableaux"] = json!(x.tableaux().rows_display());
        values.push(value);
    }
    emit(cli, text, json!(values));
    Ok(())
}

fn encode(cli: &Cli, args: &crate::SchemeArgs) -> CliResult<()> {
    args.check()?;
    let subspaces = parse_subspaces(&read_stdin()?)?;
    let mut cache: HashMap<(usize, usize, u32), Grassmannian> = HashMap::new();
    let mut text = String::new();
    let mut values = Vec::new();
    for x in &subspaces {
        let key = (x.n(), x.k(), x.q());
        let g = match cache.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(Grassmannian::new(x.n(), x.k(), x.q())?),
        };
        let scheme = args.resolve(g)?;
        let index = g.encode(x, scheme)?;
        writeln!(text, "{index}").unwrap();
        values.push(json!({
            "n": x.n(), "k": x.k(), "q": x.q(),
            "scheme": scheme.to_string(),
            "index": index.to_string(),
        }));
    }
    emit(cli, text, json!(values));
    Ok(())
}

fn distance(cli: &Cli) -> CliResult<()> {
    let subspaces = parse_subspaces(&read_stdin()?)?;
    let [x, y] = &subspaces[..] else {
        return Err(CliError::Malformed(format!(
            "distance needs exactly two subspaces, found {}",
            subspaces.len()
        )));
    };
    let f = FieldTable::new(x.q())?;
    let d = subspace_distance(x, y, &f)?;
    emit(cli, format!("{d}\n"), json!({ "distance": d }));
    Ok(())
}

fn count(cli: &Cli, args: &CountArgs) -> CliResult<()> {
    let cache = PartitionCache::new();
    if let Some(v) = &args.gaussian {
        let (n, k, q) = (v[0] as usize, v[1] as usize, v[2]);
        FieldTable::new(q)?;
        if k > n {
            return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")).into());
        }
        let value = gaussian(n, k, q, &cache);
        emit(
            cli,
            format!("{value}\n"),
            json!({ "n": n, "k": k, "q": q, "gaussian": value.to_string() }),
        );
    } else if let Some(v) = &args.alpha {
        let (n, k) = (v[0], v[1]);
        if k > n {
            return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")).into());
        }
        let alpha = cache.alpha(k, n - k);
        let mut text = String::new();
        for (size, a) in alpha.iter().enumerate() {
            writeln!(text, "{size} {a}").unwrap();
        }
        let strings: Vec<String> = alpha.iter().map(ToString::to_string).collect();
        emit(cli, text, json!({ "n": n, "k": k, "alpha": strings }));
    } else if let Some(v) = &args.pbox {
        let (m, k, eta) = (v[0], v[1], v[2]);
        let value = cache.p_box(m as i64, k, eta);
        emit(
            cli,
            format!("{value}\n"),
            json!({ "m": m, "k": k, "eta": eta, "pbox": value.to_string() }),
        );
    }
    Ok(())
}

fn save_checkpoint(path: &Path, build: &CodeBuild) -> CliResult<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, build.to_checkpoint())?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn lexicode(
    cli: &Cli,
    g: &Grassmannian,
    d: usize,
    order: Scheme,
    limit: Option<grasscode::BigUint>,
    checkpoint: Option<&Path>,
    every: u64,
) -> CliResult<()> {
    let mut builder = match checkpoint.filter(|p| p.exists()) {
        Some(path) => {
            let build = CodeBuild::from_checkpoint(&std::fs::read_to_string(path)?)?;
            if (build.d, build.order) != (d, order) {
                return Err(Error::ParamMismatch {
                    expected: format!("d={d} order={order}"),
                    got: format!("d={} order={} in {}", build.d, build.order, path.display()),
                }
                .into());
            }
            LexicodeBuilder::resume(g, build)?
        }
        None => LexicodeBuilder::new(g, d, order)?,
    };
    let every = if checkpoint.is_some() { every } else { 0 };
    let mut write_error = None;
    let run = builder.run_with(limit.as_ref(), every, |b| {
        let Some(path) = checkpoint else {
            return Ok(());
        };
        save_checkpoint(path, b).map_err(|e| {
            write_error = Some(e);
            Error::Precondition("checkpoint write failed".into())
        })
    });
    if let Some(e) = write_error {
        return Err(e);
    }
    run?;
    let build = builder.into_build();
    if let Some(path) = checkpoint {
        save_checkpoint(path, &build)?;
    }
    let value = json!({
        "n": build.n, "k": build.k, "q": build.q, "d": build.d,
        "order": build.order.to_string(),
        "next_index": build.next_index.to_string(),
        "complete": build.is_complete(g),
        "size": build.size(),
        "codewords": build.codewords.iter().map(rref_json).collect::<Vec<_>>(),
    });
    emit(cli, build.to_checkpoint(), value);
    Ok(())
}

fn bench(
    cli: &Cli,
    q: u32,
    start: usize,
    steps: usize,
    samples: usize,
    min_ms: u64,
) -> CliResult<()> {
    if start < 2 || steps == 0 {
        return Err(Error::InvalidParams("need --start >= 2 and --steps >= 1".into()).into());
    }
    let min_time = Duration::from_millis(min_ms);
    let mut text = format!(
        "{:>5} {:>4} {:>10} {:>14} {:>14}\n",
        "n", "k", "n*k*(n-k)", "encode_ns", "decode_ns"
    );
    let mut rows = Vec::new();
    let (mut enc, mut dec) = (Vec::new(), Vec::new());
    for (n, k) in doubling_grid(start, steps) {
        let g = Grassmannian::new(n, k, q)?;
        let t = measure(&g, Scheme::Extended, samples, min_time)?;
        writeln!(
            text,
            "{n:>5} {k:>4} {:>10} {:>14.1} {:>14.1}",
            t.work, t.encode_ns, t.decode_ns
        )
        .unwrap();
        rows.push(json!({
            "n": n, "k": k, "work": t.work,
            "encode_ns": t.encode_ns, "decode_ns": t.decode_ns,
        }));
        enc.push((t.work, t.encode_ns));
        dec.push((t.work, t.decode_ns));
    }
    let slopes = (steps > 1).then(|| (loglog_slope(&enc), loglog_slope(&dec)));
    if let Some((e, d)) = slopes {
        writeln!(
            text,
            "log-log slope vs n*k*(n-k): encode {e:.3}, decode {d:.3}"
        )
        .unwrap();
    }
    let value = json!({
        "scheme": "extended", "q": q, "rows": rows,
        "encode_slope": slopes.map(|s| s.0),
        "decode_slope": slopes.map(|s| s.1),
    });
    emit(cli, text, value);
    Ok(())
}
