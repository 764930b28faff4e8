//! The batch commands: strain tables, stress tables, and scale-function
//! curve sampling. Row order always matches input order, also under
//! `--parallel`.

use logstrain::{
    apply_scale, cauchy_stress, classify, strain_invariants, transform_stress, EnergyPotential,
    Frame, StrainFamily, SymTensor3, Tensor3,
};
use rayon::prelude::*;

use crate::request::{BatchRequest, Entry};
use crate::table::{Cell, Table};

pub struct CommandOutput {
    pub table: Table,
    pub failed_rows: usize,
}

struct StressColumns {
    tau: [f64; 6],
    sigma: [f64; 6],
    mean: f64,
    sigma_tilde: Option<[f64; 9]>,
}

struct RowValues {
    v: f64,
    j: f64,
    y: f64,
    z: f64,
    zeta: Option<f64>,
    class: &'static str,
    sqrt_y: f64,
    strain: [f64; 6],
    deviator: [f64; 6],
    stress: Option<StressColumns>,
}

fn flatten(t: &Tensor3) -> [f64; 9] {
    let m = t.rows();
    [
        m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
    ]
}

fn compute_row(
    entry: &Entry,
    frame: Frame,
    family: &StrainFamily,
    energy: Option<&EnergyPotential>,
) -> Result<RowValues, logstrain::Error> {
    // with a chart, the entry's F is the curvilinear gradient; strain and
    // invariant columns refer to the recovered Cartesian gradient, the
    // chart only shapes the transformed stress columns
    let f0 = match &entry.chart {
        Some(chart) => chart.cartesian_gradient(&entry.f),
        None => entry.f,
    };

    let state = match frame {
        Frame::Eulerian => logstrain::eulerian_strain(&f0, family)?,
        Frame::Lagrangian => logstrain::lagrangian_strain(&f0, family)?,
    };
    let inv = strain_invariants(&f0)?;
    let character = classify(&inv);
    let deviator = apply_scale(&state.log_strain.deviator(), family.f_tilde())?;

    let stress = match energy {
        None => None,
        Some(w) => {
            let stress_state = cauchy_stress(&f0, w)?;
            let sigma_tilde = entry.chart.as_ref().map(|chart| {
                flatten(&transform_stress(&stress_state.sigma, chart, entry.variance))
            });
            Some(StressColumns {
                tau: SymTensor3::symmetrize(&stress_state.tau).components(),
                sigma: SymTensor3::symmetrize(&stress_state.sigma).components(),
                mean: stress_state.mean,
                sigma_tilde,
            })
        }
    };

    Ok(RowValues {
        v: inv.v,
        j: inv.j,
        y: inv.y,
        z: inv.z,
        zeta: inv.zeta,
        class: character.class.as_str(),
        sqrt_y: inv.amount,
        strain: state.strain.components(),
        deviator: deviator.components(),
        stress,
    })
}

const STRAIN_COLUMNS: [&str; 20] = [
    "id", "v", "j", "y", "z", "zeta", "class", "sqrt_y", "E11", "E22", "E33", "E12", "E13", "E23",
    "D11", "D22", "D33", "D12", "D13", "D23",
];
const STRESS_COLUMNS: [&str; 13] = [
    "tau11", "tau22", "tau33", "tau12", "tau13", "tau23", "sigma11", "sigma22", "sigma33",
    "sigma12", "sigma13", "sigma23", "mean",
];
const TRANSFORMED_COLUMNS: [&str; 9] = [
    "st11", "st12", "st13", "st21", "st22", "st23", "st31", "st32", "st33",
];

fn build_header(with_stress: bool, with_charts: bool) -> Vec<&'static str> {
    let mut header: Vec<&str> = STRAIN_COLUMNS.to_vec();
    if with_stress {
        header.extend(STRESS_COLUMNS);
        if with_charts {
            header.extend(TRANSFORMED_COLUMNS);
        }
    }
    header.push("error");
    header
}

fn build_row(
    entry: &Entry,
    outcome: Result<RowValues, logstrain::Error>,
    with_stress: bool,
    with_charts: bool,
) -> Vec<Cell> {
    let width = build_header(with_stress, with_charts).len();
    let mut row = Vec::with_capacity(width);
    row.push(Cell::Text(entry.id.clone()));
    match outcome {
        Err(error) => {
            while row.len() < width - 1 {
                row.push(Cell::Empty);
            }
            row.push(Cell::Text(error.to_string()));
        }
        Ok(values) => {
            row.push(Cell::Num(values.v));
            row.push(Cell::Num(values.j));
            row.push(Cell::Num(values.y));
            row.push(Cell::Num(values.z));
            row.push(values.zeta.map_or(Cell::Empty, Cell::Num));
            row.push(Cell::Text(values.class.to_string()));
            row.push(Cell::Num(values.sqrt_y));
            row.extend(values.strain.iter().map(|x| Cell::Num(*x)));
            row.extend(values.deviator.iter().map(|x| Cell::Num(*x)));
            if with_stress {
                match values.stress {
                    Some(stress) => {
                        row.extend(stress.tau.iter().map(|x| Cell::Num(*x)));
                        row.extend(stress.sigma.iter().map(|x| Cell::Num(*x)));
                        row.push(Cell::Num(stress.mean));
                        if with_charts {
                            match stress.sigma_tilde {
                                Some(st) => row.extend(st.iter().map(|x| Cell::Num(*x))),
                                None => row.extend(std::iter::repeat_n(Cell::Empty, 9)),
                            }
                        }
                    }
                    None => {
                        let missing = STRESS_COLUMNS.len() + if with_charts { 9 } else { 0 };
                        row.extend(std::iter::repeat_n(Cell::Empty, missing));
                    }
                }
            }
            row.push(Cell::Empty);
        }
    }
    row
}

fn run_batch(req: &BatchRequest, with_stress: bool, parallel: bool) -> CommandOutput {
    let energy = if with_stress { req.energy.as_ref() } else { None };
    let with_charts = with_stress && req.entries.iter().any(|e| e.chart.is_some());

    let outcomes: Vec<Result<RowValues, logstrain::Error>> = if parallel {
        req.entries
            .par_iter()
            .map(|entry| compute_row(entry, req.frame, &req.family, energy))
            .collect()
    } else {
        req.entries
            .iter()
            .map(|entry| compute_row(entry, req.frame, &req.family, energy))
            .collect()
    };

    let mut table = Table::new(build_header(with_stress, with_charts));
    let mut failed_rows = 0;
    for (entry, outcome) in req.entries.iter().zip(outcomes) {
        if outcome.is_err() {
            failed_rows += 1;
        }
        table.push(build_row(entry, outcome, with_stress, with_charts));
    }
    CommandOutput { table, failed_rows }
}

/// Strain command: one row per entry with the strain, deviator,
/// invariants, and classification.
pub fn cmd_strain(req: &BatchRequest, parallel: bool) -> CommandOutput {
    run_batch(req, false, parallel)
}

/// Stress command: the strain table extended with Kirchhoff and Cauchy
/// stress columns, the mean stress, and (for chart entries) the
/// transformed stress in the requested variance case.
pub fn cmd_stress(req: &BatchRequest, parallel: bool) -> Result<CommandOutput, String> {
    if req.energy.is_none() {
        return Err("stress command requires an `energy` block in the request".into());
    }
    Ok(run_batch(req, true, parallel))
}

/// Curve command: samples the scale function of a family on an even grid.
pub fn cmd_curve(family: &StrainFamily, range: (f64, f64), samples: usize) -> Result<Table, String> {
    if samples < 2 {
        return Err(format!("samples must be at least 2, got {samples}"));
    }
    let (lo, hi) = range;
    // negated form also rejects NaN endpoints
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(lo < hi) {
        return Err(format!("range must satisfy min < max, got {lo}:{hi}"));
    }
    let mut table = Table::new(vec!["x", "f_tilde"]);
    let step = (hi - lo) / (samples - 1) as f64;
    for i in 0..samples {
        let x = lo + i as f64 * step;
        table.push(vec![Cell::Num(x), Cell::Num(family.f_tilde().eval(x))]);
    }
    Ok(table)
}
