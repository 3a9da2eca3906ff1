use std::io::Read;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use braidforge::braid::words_equal;
use braidforge::compiler::{compile_gate, density_probe, CompileError, Strategy};
use braidforge::presentation::parse_word;
use braidforge::surface::{hurwitz_orbit, monodromy_report, orbit_size_formula};
use braidforge::tl::{
    braid_relation_residual, eigenvalues, matrix_to_json, parse_angle, rep_matrices, unitarity_residual, unitarize,
};
use braidforge::{
    BraidSystem, BraidWord, GroupPresentation, OrbifoldGeometry, RepMatrices, SearchConfig, TLParams, TargetGate,
};

use crate::args::{
    Base, BraidCommand, Command, CompileArgs, CoverArgs, InvariantsArgs, PresentationCommand, ProbeArgs, RepArgs,
    RepParams, StrategyArg, SystemArgs, SystemSource,
};
use crate::table::{columns, key_values};
use crate::{envelope, CliError};

type Output = Result<(Value, String), CliError>;

pub fn dispatch(command: &Command) -> Output {
    match command {
        Command::Invariants(a) => invariants(a),
        Command::HurwitzOrbit(a) => orbit(a),
        Command::Braid(b) => braid(b),
        Command::Presentation(p) => presentation(p),
        Command::Rep(a) => rep(a),
        Command::Compile(a) => compile(a),
        Command::CoverReport(a) => cover(a),
        Command::DensityProbe(a) => probe(a),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize to JSON")
}

fn complex(z: [f64; 2]) -> String {
    format!("{:.6}{:+.6}i", z[0], z[1])
}

fn invariants(a: &InvariantsArgs) -> Output {
    let g = match &a.file {
        Some(path) => serde_json::from_str::<OrbifoldGeometry>(&read_input(path)?)
            .map_err(|e| CliError::Input(format!("bad geometry JSON: {e}")))?,
        None => {
            let need = |v: Option<i64>, flag: &str| {
                v.ok_or_else(|| CliError::Input(format!("missing --{flag} (or pass a geometry JSON file)")))
            };
            OrbifoldGeometry::new(
                need(a.euler_m, "euler-m")?,
                need(a.signature_m, "signature-m")?,
                need(a.euler_sigma, "euler-sigma")?,
                need(a.self_intersection, "self-intersection")?,
                need(a.cone_order, "cone-order")?,
                !a.non_orientable,
            )?
        }
    };
    let report = g.report();
    let mut body = to_value(&report);
    body["geometry"] = to_value(&g);
    let mut rows = vec![
        ("chi_orb", report.chi_orb.to_string()),
        ("tau_orb", report.tau_orb.to_string()),
        ("index_K", report.index_k.to_string()),
        ("satake_normal_euler", report.satake_normal_euler.to_string()),
        ("einstein_plus_ok", report.einstein_plus_ok.to_string()),
        ("einstein_minus_ok", report.einstein_minus_ok.to_string()),
    ];
    rows.extend(report.warnings.iter().map(|w| ("warning", w.clone())));
    Ok((envelope("invariants", body), key_values(&rows)))
}

fn braid_system(src: &SystemSource) -> Result<BraidSystem, CliError> {
    let bs = match (&src.file, src.standard, src.degree) {
        (Some(path), _, _) => BraidSystem::parse(&read_input(path)?)?,
        (None, true, Some(m)) => BraidSystem::standard(m)?,
        _ => return Err(CliError::Input("give --standard --degree M or --file PATH".into())),
    };
    if let Some(m) = src.degree {
        if m != bs.degree() {
            return Err(CliError::Input(format!("--degree {m} but the file declares degree {}", bs.degree())));
        }
    }
    Ok(bs)
}

fn orbit(a: &SystemArgs) -> Output {
    let bs = braid_system(&a.source)?;
    let orbit = hurwitz_orbit(&bs, a.cap)?;
    let mut body = json!({
        "degree": bs.degree(),
        "entries": bs.len(),
        "size": orbit.size,
        "truncated": orbit.truncated,
    });
    let mut rows = vec![
        ("degree", bs.degree().to_string()),
        ("entries", bs.len().to_string()),
        ("size", orbit.size.to_string()),
        ("truncated", orbit.truncated.to_string()),
    ];
    if a.source.standard {
        let expected = orbit_size_formula(bs.len() as u32).to_string();
        body["expected_size"] = json!(expected);
        rows.push(("(n+1)^(n-1)", expected));
    }
    let mut text = key_values(&rows);
    if a.list {
        let systems: Vec<Vec<String>> = orbit
            .keys
            .iter()
            .map(|k| k.0.iter().map(|f| f.word().to_string()).collect())
            .collect();
        body["systems"] = json!(systems);
        let header: Vec<String> = (1..=bs.len()).map(|i| format!("b{i}")).collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        text.push('\n');
        text.push_str(&columns(&header, &systems));
    }
    Ok((envelope("hurwitz-orbit", body), text))
}

fn braid(cmd: &BraidCommand) -> Output {
    match cmd {
        BraidCommand::Eq { first, second, strands } => {
            let (a, b) = (BraidWord::parse(*strands, first)?, BraidWord::parse(*strands, second)?);
            let equal = words_equal(&a, &b)?;
            let body = json!({
                "strands": strands,
                "first": a.letters(),
                "second": b.letters(),
                "equal": equal,
            });
            Ok((envelope("braid eq", body), format!("{equal}\n")))
        }
        BraidCommand::Nf { word, strands } => {
            let w = BraidWord::parse(*strands, word)?;
            let nf = w.normal_form();
            let factors: Vec<Vec<usize>> = nf.factors().iter().map(|p| p.images_one_based()).collect();
            let nf_word = nf.word();
            let body = json!({
                "strands": strands,
                "word": w.letters(),
                "delta_power": nf.delta_power(),
                "factors": factors,
                "normal_form_word": nf_word.letters(),
            });
            let factor_text: Vec<String> = nf.factors().iter().map(ToString::to_string).collect();
            let rows = [
                ("delta_power", nf.delta_power().to_string()),
                ("factors", factor_text.join(" ")),
                ("word", nf_word.to_string()),
            ];
            Ok((envelope("braid nf", body), key_values(&rows)))
        }
        BraidCommand::Perm { word, strands } => {
            let w = BraidWord::parse(*strands, word)?;
            let p = w.underlying_permutation();
            let body = json!({
                "strands": strands,
                "word": w.letters(),
                "images": p.images_one_based(),
                "cycles": p.to_string(),
            });
            let images: Vec<String> = p.images_one_based().iter().map(ToString::to_string).collect();
            let rows = [("images", images.join(" ")), ("cycles", p.to_string())];
            Ok((envelope("braid perm", body), key_values(&rows)))
        }
    }
}

fn read_presentation(path: &Path) -> Result<GroupPresentation, CliError> {
    Ok(GroupPresentation::parse(&read_input(path)?)?)
}

fn presentation(cmd: &PresentationCommand) -> Output {
    match cmd {
        PresentationCommand::Abelianize { file } => {
            let p = read_presentation(file)?;
            let ab = p.abelianization()?;
            let mut body = to_value(&ab);
            body["group"] = json!(ab.to_string());
            body["generators"] = json!(p.generator_count());
            body["relators"] = json!(p.relators().len());
            Ok((envelope("presentation abelianize", body), format!("{ab}\n")))
        }
        PresentationCommand::OrbifoldQuotient { file, loops, orders } => {
            let p = read_presentation(file)?;
            let loops = loops.iter().map(|l| parse_word(l)).collect::<Result<Vec<_>, _>>()?;
            let q = p.orbifold_quotient(&loops, orders)?;
            let ab = q.abelianization()?;
            let body = json!({
                "presentation": to_value(&q),
                "abelianization": to_value(&ab),
                "group": ab.to_string(),
            });
            Ok((envelope("presentation orbifold-quotient", body), format!("{q}abelianization  {ab}\n")))
        }
        PresentationCommand::CGroup { file } => {
            let p = read_presentation(file)?;
            let is_c = p.is_c_group();
            let ab = p.abelianization()?;
            let mut body = to_value(&ab);
            body["is_c_group"] = json!(is_c);
            body["group"] = json!(ab.to_string());
            let rows = [
                ("is_c_group", is_c.to_string()),
                ("free_rank", ab.free_rank.to_string()),
                ("abelianization", ab.to_string()),
            ];
            Ok((envelope("presentation c-group", body), key_values(&rows)))
        }
    }
}

fn params(p: &RepParams) -> Result<(TLParams, f64), CliError> {
    let theta = parse_angle(&p.a)?;
    Ok((TLParams::from_angle(theta)?, theta))
}

fn rep_summary(p: &RepParams, rm: &RepMatrices, theta: f64) -> Value {
    let a = rm.params().a_value();
    json!({
        "n": p.n,
        "p": p.p,
        "angle": theta,
        "a": [a.re, a.im],
        "loop_value": rm.params().loop_value(),
        "dimension": rm.dimension(),
        "unitarized": rm.is_unitary(),
    })
}

fn rep(a: &RepArgs) -> Output {
    let (tl, theta) = params(&a.params)?;
    let mut rm = rep_matrices(a.params.n, a.params.p, &tl)?;
    if !a.raw {
        rm = unitarize(&rm)?;
    }
    let sigma: Vec<_> = rm.sigma_images().iter().map(matrix_to_json).collect();
    let spectra: Vec<Vec<[f64; 2]>> = rm
        .sigma_images()
        .iter()
        .map(|m| eigenvalues(m).iter().map(|z| [z.re, z.im]).collect())
        .collect();
    let relation = braid_relation_residual(&rm);
    let unitarity = unitarity_residual(&rm);
    let mut body = rep_summary(&a.params, &rm, theta);
    body["sigma"] = json!(sigma);
    body["eigenvalues"] = json!(spectra);
    body["braid_relation_residual"] = json!(relation);
    body["unitarity_residual"] = json!(unitarity);

    let mut text = key_values(&[
        ("strands", a.params.n.to_string()),
        ("through_strands", a.params.p.to_string()),
        ("dimension", rm.dimension().to_string()),
        ("A", complex([rm.params().a_value().re, rm.params().a_value().im])),
        ("loop_value", format!("{:.6}", rm.params().loop_value())),
        ("unitarized", rm.is_unitary().to_string()),
        ("braid_relation_residual", format!("{relation:.3e}")),
        ("unitarity_residual", format!("{unitarity:.3e}")),
    ]);
    for (i, (m, spec)) in sigma.iter().zip(&spectra).enumerate() {
        text.push_str(&format!("\nsigma_{}\n", i + 1));
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|&z| complex(z)).collect()).collect();
        let header: Vec<String> = (1..=rows.len()).map(|c| format!("col {c}")).collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        text.push_str(&columns(&header, &rows));
        let eig: Vec<String> = spec.iter().map(|&z| complex(z)).collect();
        text.push_str(&format!("eigenvalues  {}\n", eig.join("  ")));
    }
    Ok((envelope("rep", body), text))
}

fn unitary_rep(p: &RepParams) -> Result<(RepMatrices, f64), CliError> {
    let (tl, theta) = params(p)?;
    Ok((unitarize(&rep_matrices(p.n, p.p, &tl)?)?, theta))
}

fn target(spec: &str, seed: u64) -> Result<TargetGate, CliError> {
    if spec.eq_ignore_ascii_case("haar") {
        return Ok(TargetGate::haar_su2_seeded(seed));
    }
    match TargetGate::named(spec) {
        Ok(t) => Ok(t),
        Err(CompileError::UnknownGate(_)) if Path::new(spec).exists() => Ok(TargetGate::from_json(&read_input(Path::new(spec))?)?),
        Err(CompileError::UnknownGate(_)) => Err(CliError::Input(format!(
            "unknown target {spec:?}: expected i, x, y, z, h, s, t, cnot, haar or a JSON matrix file"
        ))),
        Err(e) => Err(e.into()),
    }
}

fn compile(a: &CompileArgs) -> Output {
    let (rm, theta) = unitary_rep(&a.params)?;
    let t = target(&a.target, a.seed)?;
    let cfg = SearchConfig {
        max_depth: a.depth,
        tolerance: a.tolerance,
        beam_width: a.beam,
        strategy: match a.strategy {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::MeetInMiddle => Strategy::MeetInMiddle,
        },
        dedup: !a.no_dedup,
    };
    let r = compile_gate(&t, &rm, &cfg)?;
    let body = json!({
        "target": t.to_json_value(),
        "rep": rep_summary(&a.params, &rm, theta),
        "config": to_value(&cfg),
        "result": to_value(&r),
    });
    let rows = [
        ("word", r.word.to_string()),
        ("length", r.word.len().to_string()),
        ("distance", format!("{:.6e}", r.achieved_distance)),
        ("nodes_explored", r.nodes_explored.to_string()),
        ("depth_reached", r.depth_reached.to_string()),
    ];
    Ok((envelope("compile", body), key_values(&rows)))
}

fn cover(a: &CoverArgs) -> Output {
    let bs = braid_system(&a.source)?;
    let base = match a.base {
        Base::Disc => 1,
        Base::Sphere => 2,
    };
    let r = monodromy_report(&bs, base);
    let relation = serde_json::to_value(r.relation)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let rows = [
        ("degree", r.degree.to_string()),
        ("base_euler", r.base_euler.to_string()),
        ("branch_count", r.branch_count.to_string()),
        ("cover_euler", r.cover_euler.to_string()),
        ("transitive", r.transitive.to_string()),
        ("relation", relation),
    ];
    Ok((envelope("cover-report", to_value(&r)), key_values(&rows)))
}

fn probe(a: &ProbeArgs) -> Output {
    let (rm, theta) = unitary_rep(&a.params)?;
    let stats = density_probe(&rm, a.samples, a.depth, a.seed)?;
    let mut body = to_value(&stats);
    body["rep"] = rep_summary(&a.params, &rm, theta);
    let rows = [
        ("depth", stats.depth.to_string()),
        ("samples", stats.sample_count.to_string()),
        ("seed", stats.seed.to_string()),
        ("images", stats.images_enumerated.to_string()),
        ("min", format!("{:.6e}", stats.min)),
        ("median", format!("{:.6e}", stats.median)),
        ("max", format!("{:.6e}", stats.max)),
    ];
    Ok((envelope("density-probe", body), key_values(&rows)))
}
