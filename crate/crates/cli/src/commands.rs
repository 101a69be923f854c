use std::fmt::Write as _;
use std::io::Write;

use anyhow::{anyhow, Context, Result};
use asm_groups::constructions::{
    build_e_k, build_frame, build_symmetric_group_generators, build_symmetric_group_low_rank,
    expand_center, kronecker_group, recognize_frame, theta_embed, FrameVariant,
};
use asm_groups::enumeration::{
    classify, group_atlas_from, idempotent_census_from, square_root_census_from, AsmEnumerator,
    ClassificationReport, GroupAtlas, IdempotentCensus, SquareRootCensus,
};
use asm_groups::enumeration::atlas::ATLAS_MAX_N;
use asm_groups::enumeration::census::SQUARE_ROOT_MAX_N;
use asm_groups::enumeration::classify::CLASSIFY_MAX_N;
use asm_groups::format::to_text;
use asm_groups::group::SingularGroup;
use asm_groups::order::is_idempotent;
use asm_groups::{check_asm, closure, detect_order, Asm, IntMatrix, OrderBounds, OrderVerdict, Permutation};
use serde_json::{json, Value};

use crate::io::{read_input, read_matrices, read_matrix, with_output};
use crate::{Cli, Command, Construct, Failure, Family, OutputFormat, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

impl RunConfig {
    fn bounds(&self) -> OrderBounds {
        OrderBounds {
            cap: self.order_cap as usize,
            magnitude_bound: self.magnitude_bound,
        }
    }

    fn jobs(&self) -> usize {
        self.jobs.map(|j| j as usize).unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
    }

    fn closure_max(&self) -> usize {
        self.closure_max as usize
    }
}

/// Text and structured renderings of one command's result.
struct Output {
    command: &'static str,
    text: String,
    json: Value,
}

fn emit(cfg: &RunConfig, out: Output) -> Result<()> {
    with_output(cfg.out.as_deref(), |w| {
        match cfg.format {
            OutputFormat::Text => w.write_all(out.text.as_bytes())?,
            OutputFormat::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
                obj.insert("command".into(), json!(out.command));
                if let Value::Object(fields) = out.json {
                    obj.extend(fields);
                }
                serde_json::to_writer_pretty(&mut *w, &Value::Object(obj))?;
                writeln!(w)?;
            }
        }
        Ok(())
    })
}

pub fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    let cfg = &cli.config;
    let result = match &cli.command {
        Command::Verify(input) => return verify(cfg, input.input.as_deref()),
        Command::Order(input) => order(cfg, input.input.as_deref()),
        Command::Closure(input) => closure_cmd(cfg, input.input.as_deref()),
        Command::Construct(c) => construct(cfg, c),
        Command::Enumerate { n, emit } => enumerate(cfg, *n, emit.as_deref()),
        Command::Classify { n } => classify_cmd(cfg, *n),
        Command::Atlas { n } => atlas(cfg, *n),
        Command::Census { n } => census(cfg, *n),
        Command::Kron { left, right } => kron_groups(cfg, left, right),
    };
    result.map_err(Failure::from)
}

fn verify(cfg: &RunConfig, input: Option<&std::path::Path>) -> std::result::Result<(), Failure> {
    let ms = read_matrices(input)?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut first_violation = None;
    for (idx, m) in ms.iter().enumerate() {
        let rank = m.rank();
        match check_asm(m) {
            Ok(()) => {
                let a = Asm::new(m.clone()).map_err(anyhow::Error::from)?;
                writeln!(
                    text,
                    "asm: true, reduced: {}, negatives: {}, rank: {}, nullity: {}",
                    a.is_reduced_form(),
                    a.negative_entry_count(),
                    rank,
                    m.n() - rank
                )
                .unwrap();
                items.push(json!({
                    "asm": true,
                    "reduced": a.is_reduced_form(),
                    "negatives": a.negative_entry_count(),
                    "rank": rank,
                    "nullity": m.n() - rank,
                }));
            }
            Err(v) => {
                writeln!(text, "asm: false, violation: {v}, rank: {}, nullity: {}", rank, m.n() - rank).unwrap();
                items.push(json!({ "asm": false, "violation": v, "rank": rank, "nullity": m.n() - rank }));
                first_violation.get_or_insert(format!("matrix {}: {v}", idx + 1));
            }
        }
    }
    emit(
        cfg,
        Output {
            command: "verify",
            text,
            json: json!({ "matrices": items }),
        },
    )?;
    match first_violation {
        Some(v) => Err(Failure {
            code: crate::EXIT_INVALID,
            message: format!("not an ASM: {v}"),
        }),
        None => Ok(()),
    }
}

fn verdict_text(v: &OrderVerdict) -> String {
    let mut t = String::new();
    match v {
        OrderVerdict::Finite(info) => {
            writeln!(t, "# order: {}, rank: {}, nullity: {}", info.order, info.rank, info.nullity).unwrap();
            writeln!(t, "# identity").unwrap();
            t.push_str(&to_text(&info.identity));
        }
        OrderVerdict::NoFiniteOrder { reason } => {
            let reason = serde_json::to_value(reason).unwrap();
            writeln!(t, "# order: none ({})", reason.as_str().unwrap_or("unknown")).unwrap();
        }
    }
    t
}

fn order(cfg: &RunConfig, input: Option<&std::path::Path>) -> Result<()> {
    let m = read_matrix(input)?;
    let v = detect_order(&m, cfg.bounds());
    let asm = check_asm(&m).is_ok();
    let mut text = format!("# asm: {asm}\n");
    text.push_str(&verdict_text(&v));
    let json = match &v {
        OrderVerdict::Finite(info) => json!({
            "asm": asm,
            "finite": true,
            "order": info.order,
            "rank": info.rank,
            "nullity": info.nullity,
            "identity": info.identity,
        }),
        OrderVerdict::NoFiniteOrder { reason } => json!({
            "asm": asm,
            "finite": false,
            "reason": reason,
        }),
    };
    emit(cfg, Output { command: "order", text, json })
}

fn group_text(g: &SingularGroup) -> String {
    let fp = g.fingerprint();
    let mut t = String::new();
    writeln!(t, "# group order: {}", fp.order).unwrap();
    writeln!(t, "# all asm: {}, all singular: {}", g.all_asm(), g.all_singular()).unwrap();
    writeln!(t, "# abelian: {}, center size: {}", fp.abelian, fp.center_size).unwrap();
    let hist: Vec<String> = fp
        .element_order_histogram
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    writeln!(t, "# element orders: {}", hist.join(" ")).unwrap();
    writeln!(t, "# identity: element {}", g.identity_index() + 1).unwrap();
    writeln!(t, "# cayley table (1-based element indices)").unwrap();
    for row in g.cayley() {
        let r: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
        writeln!(t, "#   {}", r.join(" ")).unwrap();
    }
    for (i, m) in g.elements().iter().enumerate() {
        writeln!(t, "\n# element {} (order {})", i + 1, g.element_order(i)).unwrap();
        t.push_str(&to_text(m));
    }
    t
}

fn group_json(g: &SingularGroup) -> Value {
    json!({
        "order": g.order(),
        "all_asm": g.all_asm(),
        "all_singular": g.all_singular(),
        "fingerprint": g.fingerprint(),
        "identity_index": g.identity_index(),
        "elements": g.elements(),
        "cayley": g.cayley(),
    })
}

fn closure_cmd(cfg: &RunConfig, input: Option<&std::path::Path>) -> Result<()> {
    let gens = read_matrices(input)?;
    let g = closure(&gens, cfg.closure_max())?;
    emit(
        cfg,
        Output {
            command: "closure",
            text: group_text(&g),
            json: group_json(&g),
        },
    )
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse::<Permutation>()
        .with_context(|| format!("invalid permutation {s:?}"))
}

fn matrix_report(m: &IntMatrix, bounds: OrderBounds) -> (String, Value) {
    let v = detect_order(m, bounds);
    let rank = m.rank();
    let asm = check_asm(m).is_ok();
    let mut text = to_text(m);
    let order = v.order();
    match order {
        Some(k) => writeln!(text, "# asm: {asm}, order: {k}, rank: {rank}, nullity: {}", m.n() - rank).unwrap(),
        None => writeln!(text, "# asm: {asm}, order: none, rank: {rank}, nullity: {}", m.n() - rank).unwrap(),
    }
    let json = json!({
        "matrix": m,
        "asm": asm,
        "order": order,
        "rank": rank,
        "nullity": m.n() - rank,
    });
    (text, json)
}

fn construct(cfg: &RunConfig, c: &Construct) -> Result<()> {
    let bounds = cfg.bounds();
    let (text, json) = match c {
        Construct::Frame { perm, variant } => {
            let p = parse_perm(perm)?;
            let v: FrameVariant = variant.parse()?;
            let f = build_frame(&p, v)?;
            matrix_report(f.matrix(), bounds)
        }
        Construct::Ek { k } => {
            let e = build_e_k(*k)?;
            let m = e.matrix();
            let mut text = to_text(m);
            let idem = is_idempotent(m);
            writeln!(text, "# idempotent: {idem}, rank: {}", m.rank()).unwrap();
            writeln!(text, "# nullity: {}, reduced: {}", m.nullity(), e.is_reduced_form()).unwrap();
            let json = json!({
                "matrix": m,
                "idempotent": idem,
                "rank": m.rank(),
                "nullity": m.nullity(),
                "reduced": e.is_reduced_form(),
            });
            (text, json)
        }
        Construct::Symn { n, family } => {
            let (s, t) = match family {
                Family::NPlus4 => {
                    let (s, t) = build_symmetric_group_generators(*n)?;
                    (s.asm.into_matrix(), t.asm.into_matrix())
                }
                Family::LowRank => {
                    let (s, t) = build_symmetric_group_low_rank(*n)?;
                    (s.into_matrix(), t.into_matrix())
                }
            };
            let g = closure(&[s.clone(), t.clone()], cfg.closure_max())?;
            let mut text = String::from("# S\n");
            text.push_str(&to_text(&s));
            text.push_str("\n# T\n");
            text.push_str(&to_text(&t));
            writeln!(
                text,
                "# group order: {}, all asm: {}, all singular: {}",
                g.order(),
                g.all_asm(),
                g.all_singular()
            )
            .unwrap();
            let json = json!({
                "s": s,
                "t": t,
                "group_order": g.order(),
                "all_asm": g.all_asm(),
                "all_singular": g.all_singular(),
                "fingerprint": g.fingerprint(),
            });
            (text, json)
        }
        Construct::Theta { k, perm } => {
            let p = parse_perm(perm)?;
            let a = theta_embed(&p, *k)?;
            matrix_report(a.matrix(), bounds)
        }
        Construct::Kron { left, right } => {
            let a = read_matrix(Some(left))?;
            let b = read_matrix(Some(right))?;
            matrix_report(&a.kronecker(&b)?, bounds)
        }
        Construct::ExpandCenter { base, perm } => {
            let m = read_matrix(Some(base))?;
            let framed = recognize_frame(&m)
                .ok_or_else(|| anyhow!("base matrix is not a frame or theta construction"))?;
            let p = parse_perm(perm)?;
            let out = expand_center(&framed, &p)?;
            matrix_report(out.matrix(), bounds)
        }
    };
    emit(
        cfg,
        Output {
            command: "construct",
            text,
            json,
        },
    )
}

fn enumerate(cfg: &RunConfig, n: usize, emit_path: Option<&std::path::Path>) -> Result<()> {
    if n > CLASSIFY_MAX_N {
        return Err(asm_groups::Error::ResourceGuard { n, max: CLASSIFY_MAX_N }.into());
    }
    let json = cfg.format == OutputFormat::Json;
    let stream = |w: &mut dyn Write, with_header: bool| -> Result<u64> {
        let mut count = 0u64;
        if json {
            if with_header {
                write!(w, "{{\"schema_version\":{SCHEMA_VERSION},\"command\":\"enumerate\",\"n\":{n},\"matrices\":[")?;
            } else {
                write!(w, "[")?;
            }
        }
        for a in AsmEnumerator::new(n) {
            if json {
                if count > 0 {
                    write!(w, ",")?;
                }
                write!(w, "\n{}", serde_json::to_string(a.matrix())?)?;
            } else {
                if count > 0 {
                    writeln!(w)?;
                }
                w.write_all(to_text(a.matrix()).as_bytes())?;
            }
            count += 1;
        }
        if json {
            if with_header {
                writeln!(w, "\n],\"count\":{count}}}")?;
            } else {
                writeln!(w, "\n]")?;
            }
        }
        Ok(count)
    };
    match emit_path {
        None => {
            with_output(cfg.out.as_deref(), |w| stream(w, true))?;
        }
        Some(path) => {
            let count = with_output(Some(path), |w| stream(w, false))?;
            emit(
                cfg,
                Output {
                    command: "enumerate",
                    text: format!("n: {n}\ncount: {count}\n"),
                    json: json!({ "n": n, "count": count, "emitted_to": path.display().to_string() }),
                },
            )?;
        }
    }
    Ok(())
}

fn run_classify(cfg: &RunConfig, n: usize) -> Result<ClassificationReport> {
    Ok(classify(n, cfg.bounds(), cfg.jobs())?)
}

fn counts(map: &std::collections::BTreeMap<usize, u64>) -> String {
    map.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut t = String::new();
    writeln!(t, "n: {}", r.n).unwrap();
    writeln!(t, "total ASMs: {}", r.total_asm_count).unwrap();
    writeln!(t, "singular: {}", r.singular_count).unwrap();
    writeln!(t, "singular ASMs of finite order, by order:").unwrap();
    for (k, v) in &r.per_order {
        writeln!(t, "{k}:{v}").unwrap();
    }
    writeln!(t, "idempotents: {}", r.idempotent_count).unwrap();
    for (k, hist) in &r.negatives_per_order {
        let h: Vec<String> = hist.iter().map(|(neg, c)| format!("{neg} negatives x{c}")).collect();
        writeln!(t, "order {k} negative entries: {}", h.join(", ")).unwrap();
    }
    if !r.powers_leave_asms.is_empty() {
        writeln!(t, "finite order with a non-ASM power (not counted): {}", counts(&r.powers_leave_asms)).unwrap();
    }
    for (reason, c) in &r.no_finite_order {
        let reason = serde_json::to_value(reason).unwrap();
        writeln!(t, "no finite order ({}): {c}", reason.as_str().unwrap_or("?")).unwrap();
    }
    for w in &r.warnings {
        writeln!(t, "warning: {w}").unwrap();
    }
    t
}

fn classify_cmd(cfg: &RunConfig, n: usize) -> Result<()> {
    let r = run_classify(cfg, n)?;
    emit(
        cfg,
        Output {
            command: "classify",
            text: classify_text(&r),
            json: json!({ "report": r }),
        },
    )
}

fn atlas_text(a: &GroupAtlas) -> String {
    let mut t = String::new();
    writeln!(t, "n: {}", a.n).unwrap();
    writeln!(t, "identity classes: {}", a.classes.len()).unwrap();
    writeln!(t, "largest group order: {}", a.max_group_order).unwrap();
    let orders: Vec<String> = a.group_orders.iter().map(usize::to_string).collect();
    writeln!(t, "group orders: {}", orders.join(" ")).unwrap();
    let na: Vec<String> = a.non_abelian_orders.iter().map(usize::to_string).collect();
    writeln!(t, "non-abelian maximal group orders: {}", na.join(" ")).unwrap();
    for (i, c) in a.classes.iter().enumerate() {
        writeln!(t, "class {}: {} elements, rank {}", i + 1, c.class_size, c.identity.rank()).unwrap();
        for g in &c.maximal_groups {
            let fp = &g.fingerprint;
            let hist: Vec<String> = fp
                .element_order_histogram
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            writeln!(
                t,
                "  maximal group: order {}, {}, element orders {}, center {}",
                fp.order,
                if fp.abelian { "abelian" } else { "non-abelian" },
                hist.join(" "),
                fp.center_size
            )
            .unwrap();
        }
    }
    t
}

fn atlas(cfg: &RunConfig, n: usize) -> Result<()> {
    if n > ATLAS_MAX_N {
        return Err(asm_groups::Error::ResourceGuard { n, max: ATLAS_MAX_N }.into());
    }
    let r = run_classify(cfg, n)?;
    let a = group_atlas_from(&r, cfg.closure_max())?;
    emit(
        cfg,
        Output {
            command: "atlas",
            text: atlas_text(&a),
            json: json!({ "atlas": a }),
        },
    )
}

fn census_text(c: &IdempotentCensus, roots: Option<&SquareRootCensus>) -> String {
    let mut t = String::new();
    writeln!(t, "# n: {}", c.n).unwrap();
    writeln!(t, "# idempotents: {}", c.records.len()).unwrap();
    writeln!(t, "# all nullity 2: {}, all reduce to E1 or its transpose: {}", c.all_nullity_two, c.all_reduce_to_e1).unwrap();
    if let Some(s) = roots {
        let m: Vec<String> = s.multiplicities.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(t, "# order-2 square roots: {}, per idempotent (roots:idempotents) {}", s.total_roots, m.join(" ")).unwrap();
    }
    for (i, r) in c.records.iter().enumerate() {
        let kind = serde_json::to_value(r.reduced_kind).unwrap();
        let deleted: Vec<String> = r.deleted_indices.iter().map(usize::to_string).collect();
        writeln!(
            t,
            "\n# idempotent {}: nullity {}, reduced form {}, deleted [{}]",
            i + 1,
            r.nullity,
            kind.as_str().unwrap_or("?"),
            deleted.join(",")
        )
        .unwrap();
        if let Some(s) = roots {
            if let Some(e) = s.entries.iter().find(|e| e.idempotent == r.matrix) {
                writeln!(t, "# square roots: {}", e.roots.len()).unwrap();
            }
        }
        t.push_str(&to_text(&r.matrix));
    }
    t
}

fn census(cfg: &RunConfig, n: usize) -> Result<()> {
    let r = run_classify(cfg, n)?;
    let c = idempotent_census_from(&r);
    let roots = (n <= SQUARE_ROOT_MAX_N).then(|| square_root_census_from(&r));
    emit(
        cfg,
        Output {
            command: "census",
            text: census_text(&c, roots.as_ref()),
            json: json!({ "idempotents": c, "square_roots": roots }),
        },
    )
}

fn kron_groups(cfg: &RunConfig, left: &std::path::Path, right: &std::path::Path) -> Result<()> {
    let lg = parse_generators(left)?;
    let rg = parse_generators(right)?;
    let g = closure(&lg, cfg.closure_max())?;
    let h = closure(&rg, cfg.closure_max())?;
    let gh = kronecker_group(&g, &h)?;
    emit(
        cfg,
        Output {
            command: "kron",
            text: group_text(&gh),
            json: group_json(&gh),
        },
    )
}

fn parse_generators(path: &std::path::Path) -> Result<Vec<IntMatrix>> {
    let text = read_input(Some(path))?;
    let ms = asm_groups::format::parse_matrices(&text)?;
    anyhow::ensure!(!ms.is_empty(), "no matrix found in {}", path.display());
    Ok(ms)
}
