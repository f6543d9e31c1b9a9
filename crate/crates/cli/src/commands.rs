//! Subcommand bodies. Each writes either a JSON document or plain text to
//! `out`; nothing here prints timing unless asked, so reruns with the same
//! flags are byte-identical.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use mqsolve_core::estimator::{
    baseline_costs, minimize_exponent, quantum_security_bits, security_parameters, Baselines, ComplexityProfile,
    SecurityRow, Setting, Variant,
};
use mqsolve_core::linalg::SolverOptions;
use mqsolve_core::macaulay::{
    build_macaulay, consistency_certificate, shape_bounds, witness_degree, Certificate, CertificateBackend,
};
use mqsolve_core::mq::{parse_system, random_system, Assignment, PolynomialSystem};
use mqsolve_core::quantum::{
    build_equality_circuit, build_inner_product_circuit, build_matmul_circuit, build_matvec_circuit, gate_cost,
    grover_search_sim, qrs_gate_count, sample_shots, GateCost, IterationRule, QrsGateCount,
};
use mqsolve_core::rng;
use mqsolve_core::solver::{
    classical_boolean_solve, consistency_table, quantum_parameters, solve_with_table, KPolicy, QuantumSolveReport,
    SolveConfig,
};

use crate::{
    BackendArg, CircuitArg, CliError, Command, EstimateArgs, GatecountArgs, GenArgs, GroverArgs, MacaulayArgs, RuleArg,
    SettingArg, SolveArgs, VariantArg,
};

/// Largest `n` for which `gatecount` materializes a circuit.
const MAX_BUILT_CIRCUIT_N: u64 = 128;

type Out<'a> = &'a mut dyn Write;

pub(crate) fn run(command: &Command, out: Out<'_>) -> Result<(), CliError> {
    match command {
        Command::Gen(a) => gen(a, out),
        Command::Solve(a) => solve(a, out),
        Command::Grover(a) => grover(a, out),
        Command::Macaulay(a) => macaulay(a, out),
        Command::Gatecount(a) => gatecount(a, out),
        Command::Estimate(a) => estimate(a, out),
    }
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Det => Variant::Deterministic,
            VariantArg::Lv => Variant::LasVegas,
        }
    }
}

impl From<BackendArg> for CertificateBackend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Dense => CertificateBackend::Dense,
            BackendArg::Sparse => CertificateBackend::Sparse,
            BackendArg::CrossCheck => CertificateBackend::CrossCheck,
        }
    }
}

impl From<RuleArg> for IterationRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Floor => IterationRule::Floor,
            RuleArg::Ceiling => IterationRule::Ceiling,
        }
    }
}

impl From<SettingArg> for Setting {
    fn from(s: SettingArg) -> Self {
        match s {
            SettingArg::Classical => Setting::Classical,
            SettingArg::Quantum => Setting::Quantum,
        }
    }
}

fn io_out(e: std::io::Error) -> CliError {
    CliError::io("<stdout>", e)
}

fn write_json<T: Serialize>(out: Out<'_>, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(CliError::domain)?;
    writeln!(out, "{text}").map_err(io_out)
}

fn load_system(path: &Path) -> Result<PolynomialSystem, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_system(&text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn gen(args: &GenArgs, out: Out<'_>) -> Result<(), CliError> {
    let (n, m) = (args.n as usize, args.m as usize);
    let (system, root) = random_system(n, m, args.seed, args.plant);
    let mut text = format!("# random system n={n} m={m} seed={}\n", args.seed);
    if let Some(root) = root {
        text.push_str(&format!("# planted root (x1 first): {root}\n"));
    }
    text.push_str(&system.to_string());
    match &args.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
            if let Some(root) = root {
                writeln!(out, "planted root: {root}").map_err(io_out)?;
            }
        }
        None => out.write_all(text.as_bytes()).map_err(io_out)?,
    }
    Ok(())
}

fn solve(args: &SolveArgs, out: Out<'_>) -> Result<(), CliError> {
    let system = load_system(&args.input)?;
    let cfg = SolveConfig {
        k_policy: args.k.map_or(KPolicy::GammaOptimal, KPolicy::Explicit),
        variant: args.variant.into(),
        backend: args.backend.into(),
        seed: args.seed,
        ..SolveConfig::default()
    };
    let mut report = classical_boolean_solve(&system, &cfg).map_err(CliError::domain)?;
    if !args.timing {
        report.wall_time_ms = None;
    }
    if args.json {
        return write_json(out, &report);
    }
    let mut text = format!(
        "n = {}, m = {}, k = {}, witness degree = {}\n\
         variant = {}, backend = {}, seed = {}\n\
         macaulay tests = {}, certificates = {}, exhaustive searches = {}\n\
         solutions: {}\n",
        report.n,
        report.m,
        report.k,
        report.witness_degree,
        label(&report.variant),
        label(&report.backend),
        report.seed,
        report.macaulay_tests,
        report.certificates_found,
        report.searches_run,
        report.solutions.len(),
    );
    for s in &report.solutions {
        text.push_str(&format!("  {s}\n"));
    }
    if let Some(ms) = report.wall_time_ms {
        text.push_str(&format!("wall time: {ms:.3} ms\n"));
    }
    out.write_all(text.as_bytes()).map_err(io_out)
}

/// The serde name of a unit enum variant.
fn label<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

#[derive(Serialize)]
struct StageOneSummary {
    marked_count: u64,
    iterations: u64,
    success_probability: f64,
}

#[derive(Serialize)]
struct GroverReport {
    n: usize,
    m: usize,
    k: usize,
    seed: u64,
    rule: IterationRule,
    stage1: StageOneSummary,
    /// Sampled stage-1 measurements as bitstrings over `x_{n-k+1}..x_n`.
    shots: Vec<Assignment>,
    marked_shots: usize,
    solve: QuantumSolveReport,
}

fn grover(args: &GroverArgs, out: Out<'_>) -> Result<(), CliError> {
    let system = load_system(&args.input)?;
    let cfg = SolveConfig {
        backend: args.backend.into(),
        seed: args.seed,
        iteration_rule: args.rule.into(),
        ..SolveConfig::with_k(args.k)
    };
    let (k, d0) = quantum_parameters(&system, &cfg).map_err(CliError::domain)?;
    let table = consistency_table(&system, k, d0, &cfg).map_err(CliError::domain)?;
    let mut rng = rng::seeded(args.seed);
    let stage1 = grover_search_sim(&table, k, None, cfg.iteration_rule, &mut rng).map_err(CliError::domain)?;
    let shots: Vec<Assignment> =
        sample_shots(&stage1, args.shots, &mut rng).into_iter().map(|s| Assignment::new(s, k)).collect();
    let marked_shots = shots.iter().filter(|s| table[s.bits() as usize]).count();
    let solve = solve_with_table(&system, &cfg, k, d0, &table, &mut rng).map_err(CliError::domain)?;
    let report = GroverReport {
        n: system.num_vars(),
        m: system.num_equations(),
        k,
        seed: args.seed,
        rule: cfg.iteration_rule,
        stage1: StageOneSummary {
            marked_count: stage1.marked_count,
            iterations: stage1.iterations,
            success_probability: stage1.success_probability,
        },
        shots,
        marked_shots,
        solve,
    };
    if args.json {
        return write_json(out, &report);
    }
    let mut text = format!(
        "n = {}, m = {}, k = {}, witness degree = {}, seed = {}\n\
         stage 1: {} of {} specializations survive; {} iterations, success probability {:.6}\n\
         shots: {} of {} landed on a surviving specialization\n",
        report.n,
        report.m,
        k,
        d0,
        args.seed,
        report.stage1.marked_count,
        table.len(),
        report.stage1.iterations,
        report.stage1.success_probability,
        report.marked_shots,
        report.shots.len(),
    );
    for s in &report.shots {
        text.push_str(&format!("  {s}\n"));
    }
    match report.solve.root {
        Some(root) => text.push_str(&format!("root: {root} (after {} attempt(s))\n", report.solve.attempts)),
        None => text.push_str("root: none (every specialization refuted)\n"),
    }
    out.write_all(text.as_bytes()).map_err(io_out)
}

#[derive(Serialize)]
struct BoundsReport {
    rows: f64,
    cols: f64,
    nonzeros: f64,
}

#[derive(Serialize)]
struct CertificateReport {
    found: bool,
    /// `binary` or `extension`.
    kind: Option<&'static str>,
    field_degree: Option<u32>,
    support: usize,
    verified: bool,
}

#[derive(Serialize)]
struct MacaulayReport {
    n: usize,
    m: usize,
    k: usize,
    tail: Assignment,
    witness_degree: usize,
    degree: usize,
    rows: usize,
    cols: usize,
    nonzeros: usize,
    bounds: Option<BoundsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateReport>,
}

fn macaulay(args: &MacaulayArgs, out: Out<'_>) -> Result<(), CliError> {
    let triplets_to_stdout = args.triplets.as_deref() == Some("-");
    if triplets_to_stdout && args.json {
        return Err(CliError::Usage("--triplets - cannot be combined with --json".into()));
    }
    let system = load_system(&args.input)?;
    let (n, m) = (system.num_vars(), system.num_equations());
    let tail = match &args.tail {
        Some(bits) => {
            let tail = Assignment::from_bitstring(bits).map_err(|e| CliError::Usage(format!("--tail: {e}")))?;
            if args.k != 0 && args.k != tail.len() {
                return Err(CliError::Usage(format!("--tail has {} bits but --k is {}", tail.len(), args.k)));
            }
            tail
        }
        None => Assignment::new(0, args.k),
    };
    let k = tail.len();
    if k > n {
        return Err(CliError::Domain(format!("cannot specialize {k} of {n} variables")));
    }
    let specialized = system.specialize(&tail).map_err(CliError::domain)?;
    let d0 = witness_degree(m, n, k).map_err(CliError::domain)?;
    let degree = args.degree.unwrap_or(d0);
    let mac = build_macaulay(&specialized, degree).map_err(CliError::domain)?;

    if let Some(path) = args.triplets.as_deref() {
        if triplets_to_stdout {
            return mac.write_triplets(&mut *out).map_err(io_out);
        }
        let file = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
        let mut w = BufWriter::new(file);
        mac.write_triplets(&mut w).and_then(|()| w.flush()).map_err(|e| CliError::io(path, e))?;
    }

    let certificate = if args.certificate {
        let mut rng = rng::seeded(args.seed);
        let cert = consistency_certificate(&mac, args.backend.into(), SolverOptions::default(), &mut rng)
            .map_err(CliError::domain)?;
        Some(match cert {
            None => CertificateReport { found: false, kind: None, field_degree: None, support: 0, verified: false },
            Some(c) => {
                let (kind, field_degree) = match &c {
                    Certificate::Binary(_) => ("binary", None),
                    Certificate::Extension { field, .. } => ("extension", Some(field.degree())),
                };
                CertificateReport {
                    found: true,
                    kind: Some(kind),
                    field_degree,
                    support: c.support(),
                    verified: c.verify(&mac),
                }
            }
        })
    } else {
        None
    };

    let report = MacaulayReport {
        n,
        m,
        k,
        tail,
        witness_degree: d0,
        degree,
        rows: mac.n_rows(),
        cols: mac.n_cols(),
        nonzeros: mac.nnz(),
        bounds: shape_bounds(m, n - k, degree).map(|b| BoundsReport {
            rows: b.rows,
            cols: b.cols,
            nonzeros: b.nonzeros,
        }),
        certificate,
    };
    if args.json {
        return write_json(out, &report);
    }
    let mut text = format!(
        "n = {n}, m = {m}, k = {k}, tail = {}\n\
         witness degree d0 = {d0}, matrix degree = {degree}\n\
         rows = {}, cols = {}, nonzeros = {}\n",
        if k == 0 { "(none)".to_string() } else { report.tail.to_string() },
        report.rows,
        report.cols,
        report.nonzeros,
    );
    match &report.bounds {
        Some(b) => text
            .push_str(&format!("bounds: rows < {:.1}, cols < {:.1}, nonzeros < {:.1}\n", b.rows, b.cols, b.nonzeros)),
        None => text.push_str("bounds: not applicable (need 1 <= d < (n-k)/2)\n"),
    }
    if let Some(c) = &report.certificate {
        match c.kind {
            Some(kind) => {
                text.push_str(&format!("certificate: {kind}, {} rows, verified = {}\n", c.support, c.verified))
            }
            None => text.push_str("certificate: none (1 is not in the row space)\n"),
        }
    }
    out.write_all(text.as_bytes()).map_err(io_out)
}

#[derive(Serialize)]
struct CircuitReport {
    circuit: &'static str,
    n: u64,
    wires: usize,
    gates: usize,
    cost: GateCost,
}

#[derive(Serialize)]
struct QrsReport {
    circuit: &'static str,
    #[serde(flatten)]
    count: QrsGateCount,
}

fn gatecount(args: &GatecountArgs, out: Out<'_>) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if let CircuitArg::Qrs = args.circuit {
        let r = args.r.unwrap_or(args.n);
        if args.n > 1 << 20 {
            return Err(CliError::Usage(format!("--n {} exceeds the limit of {}", args.n, 1u64 << 20)));
        }
        let count = qrs_gate_count(args.n, r).map_err(CliError::domain)?;
        if args.json {
            return write_json(out, &QrsReport { circuit: "qrs", count });
        }
        let line = |name: &str, c: &GateCost| {
            format!(
                "{name:<6} toffoli = {}, n-toffoli = {}, cnot = {}, x = {}, gates = {}, cnot-equivalent = {}\n",
                c.toffoli, c.n_toffoli, c.cnot, c.x, c.total_gates, c.cnot_equivalent
            )
        };
        let mut text = format!("qrs circuit, n = {}, r = {r}\n", args.n);
        text.push_str(&line("step4", &count.step4));
        text.push_str(&line("step6", &count.step6));
        text.push_str(&line("step7", &count.step7));
        text.push_str(&line("total", &count.total));
        text.push_str(&format!(
            "closed form n^3 + 2n^2 + 3n + 1 = {}, residual = {}\n",
            count.closed_form, count.residual
        ));
        return out.write_all(text.as_bytes()).map_err(io_out);
    }
    if args.r.is_some() {
        return Err(CliError::Usage("--r only applies to --circuit qrs".into()));
    }
    if args.n > MAX_BUILT_CIRCUIT_N {
        return Err(CliError::Usage(format!("--n {} exceeds the limit of {MAX_BUILT_CIRCUIT_N}", args.n)));
    }
    let n = args.n as usize;
    let (name, circuit) = match args.circuit {
        CircuitArg::Equality => ("equality", build_equality_circuit()),
        CircuitArg::InnerProduct => ("inner-product", build_inner_product_circuit(n)),
        CircuitArg::Matvec => ("matvec", build_matvec_circuit(n)),
        CircuitArg::Matmul => ("matmul", build_matmul_circuit(n)),
        CircuitArg::Qrs => unreachable!("handled above"),
    };
    let report = CircuitReport {
        circuit: name,
        n: args.n,
        wires: circuit.wire_count(),
        gates: circuit.len(),
        cost: gate_cost(&circuit),
    };
    if args.json {
        return write_json(out, &report);
    }
    let c = &report.cost;
    let text = format!(
        "{name} circuit, n = {}, {} wires, {} gates\n\
         toffoli = {}, n-toffoli = {}, cnot = {}, x = {}, swap = {}\n\
         cnot-equivalent = {}\n",
        report.n, report.wires, report.gates, c.toffoli, c.n_toffoli, c.cnot, c.x, c.swap, c.cnot_equivalent
    );
    out.write_all(text.as_bytes()).map_err(io_out)
}

#[derive(Serialize)]
struct TableRow {
    #[serde(flatten)]
    row: SecurityRow,
    /// Security of the row's `n` against the quantum solver.
    quantum_security_bits: u64,
}

#[derive(Serialize)]
struct Comparison {
    #[serde(flatten)]
    costs: Baselines,
    quantum_security_bits: u64,
}

#[derive(Serialize)]
struct EstimateReport {
    alpha: f64,
    theta: f64,
    variant: Variant,
    setting: Setting,
    gamma_star: f64,
    exponent: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<TableRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    baselines: Option<Comparison>,
}

fn estimate(args: &EstimateArgs, out: Out<'_>) -> Result<(), CliError> {
    if let Some(&s) = args.security.iter().find(|&&s| s == 0) {
        return Err(CliError::Usage(format!("--security {s}: must be at least 1")));
    }
    if args.compare_n == Some(0) {
        return Err(CliError::Usage("--compare-n must be at least 1".into()));
    }
    let profile = ComplexityProfile::new(args.alpha, args.theta, args.variant.into(), args.setting.into())
        .map_err(CliError::domain)?;
    let best = minimize_exponent(&profile);
    let table = (!args.security.is_empty()).then(|| {
        args.security
            .iter()
            .map(|&s| {
                let row = security_parameters(s);
                let bits = quantum_security_bits(row.n);
                TableRow { row, quantum_security_bits: bits }
            })
            .collect::<Vec<_>>()
    });
    let baselines = args.compare_n.map(|n| Comparison {
        costs: baseline_costs(n, (args.alpha * n as f64).round() as u64),
        quantum_security_bits: quantum_security_bits(n),
    });
    let report = EstimateReport {
        alpha: args.alpha,
        theta: args.theta,
        variant: args.variant.into(),
        setting: args.setting.into(),
        gamma_star: best.gamma_star,
        exponent: best.exponent,
        table,
        baselines,
    };
    if args.json {
        return write_json(out, &report);
    }
    let mut text = format!(
        "alpha = {}, theta = {}, variant = {}, setting = {}\n\
         gamma* = {:.4}, exponent = {:.4} (cost 2^({:.4} n))\n",
        report.alpha,
        report.theta,
        label(&report.variant),
        label(&report.setting),
        report.gamma_star,
        report.exponent,
        report.exponent,
    );
    if let Some(table) = &report.table {
        text.push_str("parameters against the quantum solver (exponent 0.462)\n");
        text.push_str("security bits | n | key size | quantum security of n (bits)\n");
        for t in table {
            text.push_str(&format!(
                "{} | {} | {} | {}\n",
                t.row.security_bits, t.row.n, t.row.key_size, t.quantum_security_bits
            ));
        }
    }
    if let Some(b) = &report.baselines {
        let c = &b.costs;
        text.push_str(&format!(
            "log2 costs for n = {}, m = {}:\n\
             classical exhaustive {:.2}\n\
             approximation algorithm {:.2}\n\
             quantum exhaustive {:.2}\n\
             classical BooleanSolve {:.2}\n\
             quantum BooleanSolve {:.2}\n\
             quantum security of n = {}: {} bits\n",
            c.n,
            c.m,
            c.classical_exhaustive,
            c.approximation,
            c.quantum_exhaustive,
            c.classical_boolean_solve,
            c.quantum_boolean_solve,
            c.n,
            b.quantum_security_bits,
        ));
    }
    out.write_all(text.as_bytes()).map_err(io_out)
}
