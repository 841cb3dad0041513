//! Command-line front end: one verb per module operation, JSON or text on
//! stdout, and reproducible fixture suites.
//!
//! Exit codes: 0 success, 1 fixture-suite failures, 2 argument/parse errors,
//! 3 domain errors (space mismatches, unsupported ranges, bad indices).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

use crate::chowcore::{
    anticanonical_curve_class, bilinear_curve, bilinear_divisor, canonical_class, f_squared,
    int_to_wire, intersect, parse_any_class, parse_curve, parse_divisor, q_curve, q_divisor,
    AnyClass, ChowClass, CurveClass, DivisorClass, Space,
};
use crate::classify::{
    classification_report, mds_minus1_solutions, minus1_invariant_scan, planar_classify, vdim,
    NoWitness, PlanarException, WeylVerdict,
};
use crate::cones::{effective_membership, movable_extremal_rays, FacetId};
use crate::cremona::{
    cremona_curve, cremona_divisor, cremona_reduce, is_cremona_reduced, project, IndexSet,
    ReductionTrace, ScreenViolation, StopReason,
};
use crate::dimension::{auto_curves, corrected_dimension, naive_chi, restriction_chain_fixture};
use crate::weylorbits::{
    enumerate_orbit, is_weyl_finite, iterate_lowest, labelled_count, labelled_positive,
    labelled_total, BoundHit, OrbitBounds, OrbitResult,
};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "weylcurves",
    version,
    about = "Exact Chow-class arithmetic, Weyl orbits, and cone checks on blow-ups of projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Weyl orbit of a seed class up to canonical form
    Orbit {
        /// Seed class as JSON (curve or divisor)
        #[arg(long)]
        seed: String,
        /// Stop when |degree| exceeds this bound (mandatory on spaces with
        /// an infinite Weyl group, together with or instead of --max-count)
        #[arg(long)]
        max_degree: Option<i64>,
        /// Stop after this many canonical representatives
        #[arg(long)]
        max_count: Option<usize>,
        /// Report labelled counts per shape and in total
        #[arg(long)]
        labelled: bool,
        #[arg(long)]
        json: bool,
    },
    /// Greedily Cremona-reduce a curve class
    Reduce {
        /// Curve class as JSON
        #[arg(long)]
        class: String,
        /// List every reduction step
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply one Cremona transformation at the given centers
    Cremona {
        /// Curve class as JSON
        #[arg(long)]
        class: Option<String>,
        /// Divisor class as JSON
        #[arg(long)]
        divisor: Option<String>,
        /// Comma-separated center labels, e.g. 0,1,2,3 (r+1 of them)
        #[arg(long)]
        indices: String,
        #[arg(long)]
        json: bool,
    },
    /// Project a curve class away from one point (r >= 3)
    Project {
        /// Curve class as JSON
        #[arg(long)]
        class: String,
        /// 0-based label of the projection center
        #[arg(long)]
        point: usize,
        #[arg(long)]
        json: bool,
    },
    /// Numerical type, invariants, Weyl-class verdict, and screens
    Classify {
        /// Curve class as JSON
        #[arg(long)]
        class: String,
        /// Ask about a specific type instead of the inferred one
        #[arg(long, allow_hyphen_values = true, value_name = "I")]
        r#type: Option<i8>,
        #[arg(long)]
        max_degree: Option<i64>,
        #[arg(long)]
        max_count: Option<usize>,
        /// Print the witness trace when the verdict is yes
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every effective-cone facet on a divisor
    ConeCheck {
        /// Divisor class as JSON
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        json: bool,
    },
    /// List the movable-cone extremal rays of Y^r_{r+3}
    Rays {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Expected-dimension ledger with (-1)-curve corrections
    Dim {
        /// Divisor class as JSON
        #[arg(long)]
        divisor: String,
        /// Correct by every line through 2 points and RNC through r+3
        #[arg(long)]
        auto_curves: bool,
        /// Additional correction curve as JSON (repeatable)
        #[arg(long)]
        curve: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a reproducible check suite: paper-numbers, orbit-counts, invariance
    Fixtures {
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

/// Parse and dispatch; returns the process exit code.
pub fn run(args: Vec<String>) -> i32 {
    let mut argv = vec!["weylcurves".to_string()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::EmptyInput(_) => 2,
                _ => 3,
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Orbit {
            seed,
            max_degree,
            max_count,
            labelled,
            json,
        } => {
            match parse_any_class(&seed)? {
                AnyClass::Curve(c) => cmd_orbit(&c, max_degree, max_count, labelled, json),
                AnyClass::Divisor(d) => cmd_orbit(&d, max_degree, max_count, labelled, json),
            }?;
            Ok(0)
        }
        Command::Reduce { class, trace, json } => {
            cmd_reduce(&parse_curve(&class)?, trace, json);
            Ok(0)
        }
        Command::Cremona {
            class,
            divisor,
            indices,
            json,
        } => {
            cmd_cremona(class, divisor, &indices, json)?;
            Ok(0)
        }
        Command::Project { class, point, json } => {
            let c = parse_curve(&class)?;
            let image = project(&c, point)?;
            if json {
                println!("{}", json!({ "projection": image.to_json() }));
            } else {
                println!("{image} on {}", image.space());
            }
            Ok(0)
        }
        Command::Classify {
            class,
            r#type,
            max_degree,
            max_count,
            trace,
            json,
        } => {
            cmd_classify(&parse_curve(&class)?, r#type, max_degree, max_count, trace, json)?;
            Ok(0)
        }
        Command::ConeCheck { divisor, json } => {
            cmd_cone_check(&parse_divisor(&divisor)?, json)?;
            Ok(0)
        }
        Command::Rays { r, json } => {
            let space = Space::new(r, r as usize + 3)?;
            let rays = movable_extremal_rays(space)?;
            if json {
                let list: Vec<Value> = rays.iter().map(class_json).collect();
                println!(
                    "{}",
                    json!({ "space": space_json(space), "count": rays.len(), "rays": list })
                );
            } else {
                println!("{} extremal rays on {space}", rays.len());
                for ray in &rays {
                    println!("{ray}");
                }
            }
            Ok(0)
        }
        Command::Dim {
            divisor,
            auto_curves: auto,
            curve,
            json,
        } => {
            cmd_dim(&parse_divisor(&divisor)?, auto, &curve, json)?;
            Ok(0)
        }
        Command::Fixtures { suite, json } => cmd_fixtures(&suite, json),
    }
}

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

fn class_json<C: ChowClass>(c: &C) -> Value {
    json!({
        "kind": C::KIND,
        "r": c.space().r(),
        "s": c.space().s(),
        "d": int_to_wire(c.degree()),
        "m": c.mults().iter().map(int_to_wire).collect::<Vec<_>>(),
    })
}

fn space_json(space: Space) -> Value {
    json!({ "r": space.r(), "s": space.s() })
}

fn stop_str(stop: StopReason) -> &'static str {
    match stop {
        StopReason::Inequality => "inequality",
        StopReason::SmallDegree => "small-degree",
        StopReason::NoCremona => "no-cremona",
    }
}

fn bound_str(bound: BoundHit) -> &'static str {
    match bound {
        BoundHit::MaxDegree => "max-degree",
        BoundHit::MaxReps => "max-reps",
    }
}

fn trace_json<C: ChowClass>(trace: &ReductionTrace<C>) -> Value {
    json!({
        "start": class_json(&trace.start),
        "steps": trace.steps.iter().map(|i| i.labels().to_vec()).collect::<Vec<_>>(),
        "end": class_json(&trace.end),
        "canonical_replay": trace.canonical_replay,
        "stop": stop_str(trace.stop),
    })
}

fn screen_json(v: &ScreenViolation) -> Value {
    match v {
        ScreenViolation::MultiplicityRange { label } => {
            json!({ "kind": "multiplicity-range", "label": label })
        }
        ScreenViolation::PairSum { labels } => {
            json!({ "kind": "pair-sum", "labels": [labels.0, labels.1] })
        }
        ScreenViolation::TailSupport { k, position } => {
            json!({ "kind": "tail-support", "k": k, "position": position })
        }
    }
}

fn screen_str(v: &ScreenViolation) -> String {
    match v {
        ScreenViolation::MultiplicityRange { label } => format!("multiplicity-range at {label}"),
        ScreenViolation::PairSum { labels } => format!("pair-sum {{{},{}}}", labels.0, labels.1),
        ScreenViolation::TailSupport { k, position } => {
            format!("tail-support k={k} at sorted position {position}")
        }
    }
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

fn resolve_bounds(
    space: Space,
    max_degree: Option<i64>,
    max_count: Option<usize>,
    require_on_infinite: bool,
) -> Result<OrbitBounds> {
    if require_on_infinite && !is_weyl_finite(space) && max_degree.is_none() && max_count.is_none()
    {
        return Err(Error::Unsupported(format!(
            "{space} has an infinite Weyl group; bound the enumeration with --max-degree and/or --max-count"
        )));
    }
    Ok(OrbitBounds::new(
        max_degree.unwrap_or(1_000_000),
        max_count.unwrap_or(100_000),
    ))
}

fn cmd_orbit<C: ChowClass + Send + Sync>(
    seed: &C,
    max_degree: Option<i64>,
    max_count: Option<usize>,
    labelled: bool,
    json: bool,
) -> Result<()> {
    let space = seed.space();
    let bounds = resolve_bounds(space, max_degree, max_count, true)?;
    let orbit = enumerate_orbit(seed, &bounds);
    if json {
        let shapes: Vec<Value> = orbit
            .representatives
            .iter()
            .map(|shape| {
                let mut v = json!({ "class": class_json(shape.class()) });
                if labelled {
                    v["labelled"] = int_to_wire(&labelled_count(shape));
                }
                v
            })
            .collect();
        let mut out = json!({
            "space": space_json(space),
            "seed": class_json(seed),
            "complete": orbit.complete,
            "bound_hit": orbit.bound_hit.map(bound_str),
            "count": orbit.representatives.len(),
            "shapes": shapes,
        });
        if labelled {
            out["labelled_total"] = int_to_wire(&labelled_total(&orbit));
            out["labelled_positive"] = int_to_wire(&labelled_positive(&orbit));
        }
        println!("{out}");
    } else {
        println!("space {space}");
        println!("seed {seed}");
        println!("shapes {}", orbit.representatives.len());
        if labelled {
            println!("labelled total {}", labelled_total(&orbit));
            println!("labelled positive {}", labelled_positive(&orbit));
        }
        match orbit.bound_hit {
            Some(b) => println!("complete false (hit {})", bound_str(b)),
            None => println!("complete true"),
        }
        for shape in &orbit.representatives {
            if labelled {
                println!("{} labelled {}", shape.class(), labelled_count(shape));
            } else {
                println!("{}", shape.class());
            }
        }
    }
    Ok(())
}

fn cmd_reduce(c: &CurveClass, trace: bool, json: bool) {
    let run = cremona_reduce(c);
    if json {
        println!(
            "{}",
            json!({ "reduction": trace_json(&run), "steps": run.steps.len() })
        );
    } else {
        println!("start {}", run.start);
        if trace {
            let mut at = run.start.clone();
            for idx in &run.steps {
                at = cremona_curve(&at, idx).expect("recorded step replays");
                println!("step {idx} -> {at}");
            }
        }
        println!("end {}", run.end);
        println!("steps {}", run.steps.len());
        println!("stop {}", stop_str(run.stop));
    }
}

fn cmd_cremona(
    class: Option<String>,
    divisor: Option<String>,
    indices: &str,
    json: bool,
) -> Result<()> {
    let labels = indices
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index {t:?} in --indices")))
        })
        .collect::<Result<Vec<_>>>()?;
    match (class, divisor) {
        (Some(text), None) => {
            let c = parse_curve(&text)?;
            let idx = IndexSet::new(c.space(), labels)?;
            let image = cremona_curve(&c, &idx)?;
            if json {
                println!("{}", json!({ "image": class_json(&image) }));
            } else {
                println!("{image}");
            }
            Ok(())
        }
        (None, Some(text)) => {
            let d = parse_divisor(&text)?;
            let idx = IndexSet::new(d.space(), labels)?;
            let image = cremona_divisor(&d, &idx)?;
            if json {
                println!("{}", json!({ "image": class_json(&image) }));
            } else {
                println!("{image}");
            }
            Ok(())
        }
        _ => Err(Error::Parse(
            "pass exactly one of --class or --divisor".into(),
        )),
    }
}

fn verdict_json(v: &WeylVerdict) -> Value {
    match v {
        WeylVerdict::Yes { trace } => json!({ "verdict": "yes", "trace": trace_json(trace) }),
        WeylVerdict::No { reason } => {
            let reason = match reason {
                NoWitness::InvariantMismatch { pairing, quadratic } => json!({
                    "kind": "invariant-mismatch",
                    "pairing": int_to_wire(pairing),
                    "quadratic": int_to_wire(quadratic),
                }),
                NoWitness::ReducedWitness { witness } => {
                    json!({ "kind": "reduced-witness", "witness": class_json(witness) })
                }
                NoWitness::NoSeed => json!({ "kind": "no-seed" }),
            };
            json!({ "verdict": "no", "reason": reason })
        }
        WeylVerdict::Unknown { bound } => {
            json!({ "verdict": "unknown", "bound": bound_str(*bound) })
        }
    }
}

fn verdict_str(v: &WeylVerdict) -> String {
    match v {
        WeylVerdict::Yes { trace } => format!("yes ({} steps to the seed)", trace.steps.len()),
        WeylVerdict::No { reason } => match reason {
            NoWitness::InvariantMismatch { pairing, quadratic } => {
                format!("no (invariant mismatch: <c,F> = {pairing}, <c,c> = {quadratic})")
            }
            NoWitness::ReducedWitness { witness } => format!("no (reduced witness {witness})"),
            NoWitness::NoSeed => "no (too few points for the seed)".into(),
        },
        WeylVerdict::Unknown { bound } => format!("unknown (hit {})", bound_str(*bound)),
    }
}

fn cmd_classify(
    c: &CurveClass,
    requested: Option<i8>,
    max_degree: Option<i64>,
    max_count: Option<usize>,
    trace: bool,
    json: bool,
) -> Result<()> {
    let space = c.space();
    let bounds = OrbitBounds::new(max_degree.unwrap_or(1_000_000), max_count.unwrap_or(10_000));
    let report = classification_report(c, requested, &bounds)?;
    let f = anticanonical_curve_class(space);
    let pairing = bilinear_curve(c, &f)?;
    let quadratic = q_curve(c);
    let dim = vdim(c);
    if json {
        let mut out = json!({
            "class": class_json(c),
            "space": space_json(space),
            "pairing_f": int_to_wire(&pairing),
            "quadratic": int_to_wire(&quadratic),
            "numerical_type": report.numerical_type,
            "quadratic_match": report.quadratic_match,
            "cremona_reduced": is_cremona_reduced(c),
            "weyl_class": verdict_json(&report.weyl_class),
            "screens": report.screens.iter().map(screen_json).collect::<Vec<_>>(),
            "vdim": int_to_wire(&dim),
        });
        if let Some((mult, rem)) = &report.decomposition {
            out["decomposition"] =
                json!({ "multiple": int_to_wire(mult), "remainder": class_json(rem) });
        }
        if space.r() == 2 {
            let p = planar_classify(c)?;
            out["planar"] = json!({
                "self_intersection": int_to_wire(&p.self_intersection),
                "k_degree": int_to_wire(&p.k_degree),
                "p_a": int_to_wire(&p.p_a),
                "chi": int_to_wire(&p.chi),
                "rational_type": p.rational_type.as_ref().map(int_to_wire),
                "del_pezzo_type": p.del_pezzo_type,
                "exception": p.exception.map(exception_str),
            });
        }
        println!("{out}");
    } else {
        println!("class {c} on {space}");
        println!("pairing with F {pairing}");
        println!("quadratic {quadratic}");
        match report.numerical_type {
            Some(i) => println!("numerical type {i}"),
            None => println!("numerical type none"),
        }
        match report.quadratic_match {
            Some(i) => println!("quadratic matches type {i}"),
            None => println!("quadratic matches no type"),
        }
        println!("cremona reduced {}", is_cremona_reduced(c));
        println!("weyl class {}", verdict_str(&report.weyl_class));
        if trace {
            if let WeylVerdict::Yes { trace } = &report.weyl_class {
                let mode = if trace.canonical_replay {
                    "canonical replay"
                } else {
                    "exact replay"
                };
                println!("trace ({mode}) from {}", trace.start);
                for idx in &trace.steps {
                    println!("  step {idx}");
                }
                println!("  end {}", trace.end);
            }
        }
        if report.screens.is_empty() {
            println!("screens clear");
        } else {
            let list: Vec<String> = report.screens.iter().map(screen_str).collect();
            println!("screen violations: {}", list.join("; "));
        }
        if let Some((mult, rem)) = &report.decomposition {
            println!("decomposition {mult} F + {rem}");
        }
        if dim.is_zero() {
            println!("vdim 0 (expected rigid)");
        } else {
            println!("vdim {dim}");
        }
        if space.r() == 2 {
            let p = planar_classify(c)?;
            println!(
                "planar self-intersection {} K-degree {} p_a {} chi {}",
                p.self_intersection, p.k_degree, p.p_a, p.chi
            );
            match p.rational_type {
                Some(i) => println!("planar rational type {i}"),
                None => println!("planar rational type none"),
            }
            match p.del_pezzo_type {
                Some(i) => println!("del pezzo type {i}"),
                None => println!("del pezzo type none"),
            }
            if let Some(e) = p.exception {
                println!("known exception {}", exception_str(e));
            }
        }
    }
    Ok(())
}

fn exception_str(e: PlanarException) -> &'static str {
    match e {
        PlanarException::AnticanonicalOn8Points => "anticanonical-on-8-points",
        PlanarException::FClassOn7Points => "f-class-on-7-points",
        PlanarException::TwoFOn8Points => "two-f-on-8-points",
    }
}

fn facet_id_json(id: &FacetId) -> Value {
    match id {
        FacetId::A { i } => json!({ "family": "A", "i": i }),
        FacetId::APrime { i } => json!({ "family": "A'", "i": i }),
        FacetId::B { t, set } => json!({ "family": "B", "t": t, "set": set }),
    }
}

fn cmd_cone_check(d: &DivisorClass, json: bool) -> Result<()> {
    let reports = effective_membership(d)?;
    let effective = reports.iter().all(|f| f.satisfied);
    if json {
        let facets: Vec<Value> = reports
            .iter()
            .map(|f| {
                json!({
                    "id": facet_id_json(&f.id),
                    "value": int_to_wire(&f.value),
                    "satisfied": f.satisfied,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "divisor": class_json(d),
                "effective": effective,
                "facets": facets,
            })
        );
    } else {
        println!("divisor {d} on {}", d.space());
        println!("effective {effective}");
        for f in &reports {
            let mark = if f.satisfied { "ok" } else { "VIOLATED" };
            println!("{} {} {}", f.id, f.value, mark);
        }
    }
    Ok(())
}

fn cmd_dim(d: &DivisorClass, auto: bool, extra: &[String], json: bool) -> Result<()> {
    let mut curves = if auto {
        auto_curves(d.space())?
    } else {
        Vec::new()
    };
    for text in extra {
        curves.push(parse_curve(text)?);
    }
    let ledger = corrected_dimension(d, &curves, None)?;
    if json {
        let entries: Vec<Value> = ledger
            .entries
            .iter()
            .map(|e| {
                json!({
                    "curve": class_json(&e.curve),
                    "k": int_to_wire(&e.k),
                    "contribution": int_to_wire(&e.contribution),
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "divisor": class_json(d),
                "base": int_to_wire(&ledger.base),
                "entries": entries,
                "total": int_to_wire(&ledger.total),
            })
        );
    } else {
        println!("divisor {d} on {}", d.space());
        println!("base {}", ledger.base);
        for e in &ledger.entries {
            println!("correction {} k {} contributes {}", e.curve, e.k, e.contribution);
        }
        println!("corrections {}", ledger.entries.len());
        println!("total {}", ledger.total);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Fixture suites
// ---------------------------------------------------------------------------

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Check {
    let pass = got == want;
    Check {
        name: name.to_string(),
        pass,
        detail: if pass {
            format!("{got:?}")
        } else {
            format!("got {got:?}, want {want:?}")
        },
    }
}

fn cmd_fixtures(suite: &str, json: bool) -> Result<i32> {
    let checks = match suite {
        "paper-numbers" => paper_numbers_suite()?,
        "orbit-counts" => orbit_counts_suite()?,
        "invariance" => invariance_suite()?,
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite {other:?}; available: paper-numbers, orbit-counts, invariance"
            )))
        }
    };
    let failed = checks.iter().filter(|c| !c.pass).count();
    let passed = checks.len() - failed;
    if json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
            .collect();
        println!(
            "{}",
            json!({ "suite": suite, "checks": list, "passed": passed, "failed": failed })
        );
    } else {
        for c in &checks {
            if c.pass {
                println!("ok {}", c.name);
            } else {
                println!("FAIL {} ({})", c.name, c.detail);
            }
        }
        println!("{suite}: {passed} passed, {failed} failed");
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn space(r: u32, s: usize) -> Space {
    Space::new(r, s).expect("fixture spaces are valid")
}

fn curve(r: u32, s: usize, d: i64, m: &[i64]) -> CurveClass {
    CurveClass::from_ints(space(r, s), d, m).expect("fixture classes are valid")
}

fn divisor(r: u32, s: usize, d: i64, m: &[i64]) -> DivisorClass {
    DivisorClass::from_ints(space(r, s), d, m).expect("fixture classes are valid")
}

fn paper_numbers_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let d = divisor(4, 7, 10, &[6; 7]);
    out.push(check(
        "naive chi of 10H-6(sum E) on Y^4_7",
        naive_chi(&d)?,
        BigInt::from(119),
    ));
    let ledger = corrected_dimension(&d, &auto_curves(space(4, 7))?, None)?;
    out.push(check(
        "corrected dimension on Y^4_7",
        ledger.total,
        BigInt::from(141),
    ));
    let d = divisor(5, 9, 6, &[4; 9]);
    out.push(check(
        "naive chi of 6H-4(sum E) on Y^5_9",
        naive_chi(&d)?,
        BigInt::from(-42),
    ));
    let ledger = corrected_dimension(&d, &auto_curves(space(5, 9))?, None)?;
    out.push(check(
        "corrected dimension on Y^5_9",
        ledger.total,
        BigInt::from(3),
    ));
    out.push(check(
        "restriction chain",
        restriction_chain_fixture(),
        [79, 64, 37, 22, 3].map(BigInt::from).to_vec(),
    ));

    let c = curve(4, 7, 13, &[4, 3, 3, 3, 3, 3, 3]);
    let f = anticanonical_curve_class(c.space());
    out.push(check(
        "(13;4,3^6) pairing with F",
        bilinear_curve(&c, &f)?,
        BigInt::from(-1),
    ));
    out.push(check("(13;4,3^6) quadratic", q_curve(&c), BigInt::from(-41)));

    let c = curve(6, 10, 21, &[3; 10]);
    let f = anticanonical_curve_class(c.space());
    out.push(check(
        "(21;3^10) pairing with F",
        bilinear_curve(&c, &f)?,
        BigInt::from(-3),
    ));
    out.push(check("(21;3^10) quadratic", q_curve(&c), BigInt::from(-9)));
    out.push(check("(21;3^10) cremona reduced", is_cremona_reduced(&c), true));

    let c = curve(3, 11, 7, &[4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    let f = anticanonical_curve_class(c.space());
    out.push(check(
        "(7;4,1^10) pairing with F",
        bilinear_curve(&c, &f)?,
        BigInt::from(0),
    ));
    out.push(check("(7;4,1^10) quadratic", q_curve(&c), BigInt::from(-3)));
    let verdict = classification_report(&c, Some(-1), &OrbitBounds::default())?;
    out.push(check(
        "(7;4,1^10) is not a Weyl class",
        matches!(verdict.weyl_class, WeylVerdict::No { .. }),
        true,
    ));

    let sols = mds_minus1_solutions(space(2, 7))?;
    out.push(check("Y^2_7 (-1)-solution shapes", sols.len(), 3));
    let sols = mds_minus1_solutions(space(2, 8))?;
    out.push(check("Y^2_8 (-1)-solution shapes", sols.len(), 6));
    let labelled: BigInt = sols.iter().map(labelled_count).sum();
    out.push(check(
        "Y^2_8 labelled (-1)-solutions",
        labelled,
        BigInt::from(232),
    ));
    let scan: Vec<String> = minus1_invariant_scan(space(6, 10), 21)
        .iter()
        .map(|c| c.class().to_string())
        .collect();
    out.push(check(
        "Y^6_10 scan to degree 21",
        scan,
        vec![
            "(1;1,1,0,0,0,0,0,0,0,0)".into(),
            "(6;1,1,1,1,1,1,1,1,1,0)".into(),
            "(21;3,3,3,3,3,3,3,3,3,3)".into(),
        ],
    ));

    for (r, s, want) in [(2, 9, 0), (5, 9, 0), (3, 8, 0), (4, 9, -2), (6, 10, -1)] {
        out.push(check(
            &format!("F^2 on Y^{r}_{s}"),
            f_squared(space(r, s)),
            BigInt::from(want),
        ));
    }

    for (class, want) in [
        (curve(2, 8, 3, &[1; 8]), PlanarException::AnticanonicalOn8Points),
        (curve(2, 7, 3, &[1; 7]), PlanarException::FClassOn7Points),
        (curve(2, 8, 6, &[2; 8]), PlanarException::TwoFOn8Points),
    ] {
        out.push(check(
            &format!("planar exception for {class}"),
            planar_classify(&class)?.exception,
            Some(want),
        ));
    }

    let seed = curve(4, 9, 1, &[0, 0, 0, 0, 0, 0, 0, 1, 1]);
    let run = iterate_lowest(&seed, 6)?;
    out.push(check(
        "rigid chain element 4 on Y^4_9",
        run[4].to_string(),
        "(22;3,3,3,3,4,5,5,5,6)".to_string(),
    ));

    let seed = curve(3, 8, 1, &[0, 0, 0, 0, 0, 0, 0, 1]);
    let run = iterate_lowest(&seed, 10)?;
    let degrees: Vec<BigInt> = run.iter().map(|c| c.degree().clone()).collect();
    let want: Vec<BigInt> = (0..=10i64).map(|i| BigInt::from(i * i + i + 1)).collect();
    out.push(check("Y^3_8 family degrees i^2+i+1", degrees, want));

    let seed = curve(2, 9, 1, &[0, 0, 0, 0, 0, 0, 0, 0, 1]);
    let run = iterate_lowest(&seed, 10)?;
    let degrees: Vec<BigInt> = run.iter().map(|c| c.degree().clone()).collect();
    let want: Vec<BigInt> = (0..=10i64).map(|i| BigInt::from(1 + i * (i + 1) / 2)).collect();
    out.push(check("Y^2_9 family degrees 1+i(i+1)/2", degrees, want));

    Ok(out)
}

fn orbit_counts_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let bounds = OrbitBounds::default();
    let line_orbit = |r: u32, s: usize| -> OrbitResult<CurveClass> {
        let mut m = vec![0i64; s];
        m[0] = 1;
        m[1] = 1;
        enumerate_orbit(&curve(r, s, 1, &m), &bounds)
    };
    for (r, s, shapes, total, positive) in [
        (2u32, 4usize, 2usize, 10i64, 6i64),
        (2, 5, 3, 16, 11),
        (2, 6, 3, 27, 21),
        (2, 8, 7, 240, 232),
        (3, 5, 2, 20, 10),
        (3, 6, 4, 32, 16),
        (4, 6, 2, 35, 15),
        (4, 7, 4, 64, 22),
        (5, 7, 2, 56, 21),
        (5, 8, 5, 128, 29),
        (6, 8, 2, 84, 28),
        (6, 9, 5, 256, 37),
    ] {
        let orbit = line_orbit(r, s);
        let got = (
            orbit.complete,
            orbit.representatives.len(),
            labelled_total(&orbit),
            labelled_positive(&orbit),
        );
        out.push(check(
            &format!("line orbit census on Y^{r}_{s}"),
            got,
            (true, shapes, BigInt::from(total), BigInt::from(positive)),
        ));
    }
    // the h orbit: all labelled classes are positive
    let orbit = enumerate_orbit(&curve(2, 5, 1, &[0; 5]), &bounds);
    out.push(check(
        "h orbit census on Y^2_5",
        (
            orbit.representatives.len(),
            labelled_total(&orbit),
            labelled_positive(&orbit),
        ),
        (3, BigInt::from(16), BigInt::from(16)),
    ));
    let orbit = enumerate_orbit(&curve(2, 8, 1, &[0; 8]), &bounds);
    out.push(check(
        "h orbit census on Y^2_8",
        (orbit.representatives.len(), labelled_total(&orbit)),
        (35, BigInt::from(17280)),
    ));
    let orbit = enumerate_orbit(&curve(2, 8, 1, &[1, 0, 0, 0, 0, 0, 0, 0]), &bounds);
    out.push(check(
        "h-e_1 orbit census on Y^2_8",
        (orbit.representatives.len(), labelled_total(&orbit)),
        (15, BigInt::from(2160)),
    ));
    for r in 2u32..=5 {
        let s = r as usize + 3;
        let mut m = vec![0i64; s];
        m[0] = 1;
        let orbit = enumerate_orbit(&curve(r, s, 1, &m), &bounds);
        out.push(check(
            &format!("h-e_1 orbit census on Y^{r}_{s}"),
            (orbit.representatives.len(), labelled_total(&orbit)),
            (2, BigInt::from(2 * (r as i64 + 3))),
        ));
    }
    let mut m = vec![0i64; 6];
    m[0] = -1;
    let orbit = enumerate_orbit(&divisor(3, 6, 0, &m), &bounds);
    out.push(check(
        "exceptional divisor orbit census on Y^3_6",
        (orbit.representatives.len(), labelled_total(&orbit)),
        (3, BigInt::from(32)),
    ));
    Ok(out)
}

fn rand_space(rng: &mut ChaCha20Rng, min_r: u32) -> Space {
    let r = rng.gen_range(min_r..=6);
    let s = rng.gen_range(r as usize + 1..=r as usize + 6);
    space(r, s)
}

fn rand_curve(rng: &mut ChaCha20Rng, sp: Space) -> CurveClass {
    let m: Vec<i64> = (0..sp.s()).map(|_| rng.gen_range(-6..=6)).collect();
    CurveClass::from_ints(sp, rng.gen_range(-12..=12), &m).expect("generated in range")
}

fn rand_divisor(rng: &mut ChaCha20Rng, sp: Space) -> DivisorClass {
    let m: Vec<i64> = (0..sp.s()).map(|_| rng.gen_range(-6..=6)).collect();
    DivisorClass::from_ints(sp, rng.gen_range(-12..=12), &m).expect("generated in range")
}

fn rand_indices(rng: &mut ChaCha20Rng, sp: Space) -> IndexSet {
    let mut labels: Vec<usize> = (0..sp.s()).collect();
    labels.shuffle(rng);
    labels.truncate(sp.r() as usize + 1);
    IndexSet::new(sp, labels).expect("r+1 distinct labels in range")
}

fn property(name: &str, cases: usize, mut case: impl FnMut(usize) -> Result<Option<String>>) -> Result<Check> {
    for i in 0..cases {
        if let Some(detail) = case(i)? {
            return Ok(Check {
                name: name.to_string(),
                pass: false,
                detail: format!("case {i}: {detail}"),
            });
        }
    }
    Ok(Check {
        name: name.to_string(),
        pass: true,
        detail: format!("{cases} cases"),
    })
}

fn invariance_suite() -> Result<Vec<Check>> {
    const CASES: usize = 500;
    let mut out = Vec::new();
    let mut rng = ChaCha20Rng::seed_from_u64(0x7765796c);

    out.push(property("cremona involution", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let c = rand_curve(&mut rng, sp);
        let d = rand_divisor(&mut rng, sp);
        let idx = rand_indices(&mut rng, sp);
        let c2 = cremona_curve(&cremona_curve(&c, &idx)?, &idx)?;
        let d2 = cremona_divisor(&cremona_divisor(&d, &idx)?, &idx)?;
        Ok((c2 != c || d2 != d).then(|| format!("{c} or {d} not restored at {idx}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x7765796d);
    out.push(property("pairing invariance", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let c = rand_curve(&mut rng, sp);
        let d = rand_divisor(&mut rng, sp);
        let idx = rand_indices(&mut rng, sp);
        let before = intersect(&d, &c)?;
        let after = intersect(&cremona_divisor(&d, &idx)?, &cremona_curve(&c, &idx)?)?;
        Ok((before != after).then(|| format!("(D.c) changed from {before} to {after}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x7765796e);
    out.push(property("K and F are fixed points", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let idx = rand_indices(&mut rng, sp);
        let k = canonical_class(sp);
        let f = anticanonical_curve_class(sp);
        let k_ok = cremona_divisor(&k, &idx)? == k;
        let f_ok = cremona_curve(&f, &idx)? == f;
        Ok((!k_ok || !f_ok).then(|| format!("K or F moved under {idx} on {sp}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x7765796f);
    out.push(property("quadratic form invariance", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let c = rand_curve(&mut rng, sp);
        let d = rand_divisor(&mut rng, sp);
        let idx = rand_indices(&mut rng, sp);
        let c_ok = q_curve(&cremona_curve(&c, &idx)?) == q_curve(&c);
        let d_ok = q_divisor(&cremona_divisor(&d, &idx)?) == q_divisor(&d);
        Ok((!c_ok || !d_ok).then(|| format!("q changed for {c} or {d} at {idx}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x77657970);
    out.push(property("projection commutes with Cremona", CASES, |_| {
        let sp = rand_space(&mut rng, 3);
        let c = rand_curve(&mut rng, sp);
        let idx = rand_indices(&mut rng, sp);
        let pick = rng.gen_range(0..idx.labels().len());
        let i = idx.labels()[pick];
        let left = project(&cremona_curve(&c, &idx)?, i)?;
        let shifted: Vec<usize> = idx
            .labels()
            .iter()
            .filter(|&&l| l != i)
            .map(|&l| if l > i { l - 1 } else { l })
            .collect();
        let proj = project(&c, i)?;
        let right = cremona_curve(&proj, &IndexSet::new(proj.space(), shifted)?)?;
        Ok((left != right).then(|| format!("{left} != {right} for {c} at {idx}, point {i}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x77657971);
    out.push(property("polarization identity", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let x = rand_curve(&mut rng, sp);
        let y = rand_curve(&mut rng, sp);
        let sum = CurveClass::rebuild(
            sp,
            x.degree() + y.degree(),
            x.mults()
                .iter()
                .zip(y.mults())
                .map(|(a, b)| a + b)
                .collect(),
        );
        let lhs = q_curve(&sum) - q_curve(&x) - q_curve(&y);
        let rhs = BigInt::from(2) * bilinear_curve(&x, &y)?;
        let u = rand_divisor(&mut rng, sp);
        let v = rand_divisor(&mut rng, sp);
        let dsum = DivisorClass::rebuild(
            sp,
            u.degree() + v.degree(),
            u.mults()
                .iter()
                .zip(v.mults())
                .map(|(a, b)| a + b)
                .collect(),
        );
        let dlhs = q_divisor(&dsum) - q_divisor(&u) - q_divisor(&v);
        let drhs = BigInt::from(2) * bilinear_divisor(&u, &v)?;
        Ok((lhs != rhs || dlhs != drhs).then(|| format!("failed for {x},{y} or {u},{v}")))
    })?);

    let mut rng = ChaCha20Rng::seed_from_u64(0x77657972);
    out.push(property("anticanonical degree identity", CASES, |_| {
        let sp = rand_space(&mut rng, 2);
        let c = rand_curve(&mut rng, sp);
        let k = canonical_class(sp);
        let minus_k = DivisorClass::rebuild(
            sp,
            -k.degree(),
            k.mults().iter().map(|m| -m).collect(),
        );
        let lhs = intersect(&minus_k, &c)?;
        let rhs = bilinear_curve(&anticanonical_curve_class(sp), &c)?;
        Ok((lhs != rhs).then(|| format!("(-K.c) = {lhs} but <F,c> = {rhs} for {c}")))
    })?);

    Ok(out)
}
