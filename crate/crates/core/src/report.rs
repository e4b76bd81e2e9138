//! Assembles everything known about one form into a [`Report`]: the exact
//! decision, its certificate, the nine-way configuration and the results
//! of every independent cross-check.

use serde::{Deserialize, Serialize};

use crate::classical::{classical_is_pd, classical_quantities};
use crate::classifier::{
    circle_min_estimate, classify_case, quartic_root_nature, table3_consistent,
};
use crate::exactnum::{render_quadext, QuadExtNumber, Rational};
use crate::forms::{to_weighted, NormalizedProblem};
use crate::pencil::CriticalParam;
use crate::positivity::{decide, matrix_route_class, Verdict, VerdictClass};

/// Sample count of the circle oracle.
pub const ORACLE_SAMPLES: usize = 4096;
/// The circle oracle may not contradict an exact verdict by more than this.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

pub const EXIT_DEFINITE: i32 = 0;
pub const EXIT_BOUNDARY: i32 = 1;
pub const EXIT_INDEFINITE: i32 = 2;
pub const EXIT_PARSE: i32 = 64;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_DISAGREEMENT: i32 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub crosscheck: bool,
    pub precision: usize,
    pub include_case: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            crosscheck: true,
            precision: 12,
            include_case: true,
        }
    }
}

/// `p + q·√d`, every part an exact rational string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurdJson {
    pub p: String,
    pub q: String,
    pub d: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

impl SurdJson {
    fn exact(v: &QuadExtNumber) -> Self {
        SurdJson {
            p: v.rational_part().to_string(),
            q: v.surd_part().to_string(),
            d: v.radicand().to_string(),
            decimal: None,
        }
    }

    fn with_decimal(v: &QuadExtNumber, precision: usize) -> Self {
        SurdJson {
            decimal: Some(render_quadext(v, precision)),
            ..SurdJson::exact(v)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lambda0Json {
    pub p: String,
    pub q: String,
    pub d: String,
    /// `None` when `d < 0` and λ₀ is not real.
    pub decimal: Option<String>,
    pub real: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PencilJson {
    pub b0: String,
    pub b1: String,
    pub b2: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseJson {
    pub id: u8,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct ClassicalJson {
    pub G: String,
    pub H: String,
    pub I: String,
    pub J: String,
    pub Delta: String,
    pub aux: String,
    pub pd: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub circle_min: f64,
    pub argmin_theta: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub positive: [String; 2],
    pub negative: [String; 2],
}

/// `None` means the check was skipped or does not apply.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AgreementJson {
    pub classical: Option<bool>,
    pub oracle: Option<bool>,
    pub sylvester: Option<bool>,
    pub case: Option<bool>,
    pub mirrored_coeffs: Option<bool>,
}

impl AgreementJson {
    pub fn all_agree(&self) -> bool {
        [
            self.classical,
            self.oracle,
            self.sylvester,
            self.case,
            self.mirrored_coeffs,
        ]
        .iter()
        .all(|f| f.unwrap_or(true))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// `e₄ e₃ e₂ e₁ e₀` as exact rationals.
    pub input: [String; 5],
    pub verdict: String,
    pub lambda0: Option<Lambda0Json>,
    pub g_lambda0: Option<SurdJson>,
    pub a3_sq_over_4: Option<String>,
    pub pencil: Option<PencilJson>,
    pub case: Option<CaseJson>,
    /// Positive semidefinite matrix `M` with `f = scale · vᵀ M v`.
    pub certificate: Option<[[SurdJson; 3]; 3]>,
    pub certificate_scale: Option<String>,
    pub classical: Option<ClassicalJson>,
    pub oracle: Option<OracleJson>,
    pub witnesses: Option<WitnessJson>,
    pub agreement: AgreementJson,
}

impl Report {
    pub fn verdict_class(&self) -> Option<VerdictClass> {
        VerdictClass::from_label(&self.verdict)
    }

    pub fn exit_code(&self) -> i32 {
        if !self.agreement.all_agree() {
            return EXIT_DISAGREEMENT;
        }
        self.verdict_class().map_or(EXIT_DISAGREEMENT, exit_code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn exit_code(class: VerdictClass) -> i32 {
    match class {
        VerdictClass::PositiveDefinite | VerdictClass::NegativeDefinite => EXIT_DEFINITE,
        VerdictClass::Indefinite => EXIT_INDEFINITE,
        _ => EXIT_BOUNDARY,
    }
}

pub fn build_report(problem: &NormalizedProblem, options: &ReportOptions) -> Report {
    let verdict = decide(problem);
    build_report_for(problem, &verdict, options)
}

pub fn build_report_for(
    problem: &NormalizedProblem,
    verdict: &Verdict,
    options: &ReportOptions,
) -> Report {
    let input = problem.original.coefficients().map(|c| c.to_string());
    let mut report = Report {
        input,
        verdict: verdict.class.label().to_string(),
        lambda0: None,
        g_lambda0: None,
        a3_sq_over_4: None,
        pencil: None,
        case: None,
        certificate: None,
        certificate_scale: None,
        classical: None,
        oracle: None,
        witnesses: None,
        agreement: AgreementJson::default(),
    };
    if let Some(cert) = &verdict.certificate {
        let rows = cert.matrix.rows();
        report.certificate = Some(rows.map(|row| row.map(|e| SurdJson::exact(&e))));
        report.certificate_scale = Some(cert.scale.to_string());
    }
    if let Some(w) = &verdict.witnesses {
        let pair = |p: &(Rational, Rational)| [p.0.to_string(), p.1.to_string()];
        report.witnesses = Some(WitnessJson {
            positive: pair(&w.positive),
            negative: pair(&w.negative),
        });
    }
    let Some(trace) = &verdict.trace else {
        return report;
    };
    let form = &trace.form;
    // Positive-side class of the reduced monic form.
    let reduced_class = match problem.orientation {
        crate::forms::Orientation::PositiveSide => verdict.class,
        crate::forms::Orientation::NegativeSide => verdict.class.mirrored(),
    };

    report.lambda0 = Some(match &trace.lambda0 {
        CriticalParam::Real { value, .. } => Lambda0Json {
            p: value.rational_part().to_string(),
            q: value.surd_part().to_string(),
            d: value.radicand().to_string(),
            decimal: Some(render_quadext(value, options.precision)),
            real: true,
        },
        CriticalParam::NonReal { radicand } => Lambda0Json {
            p: (Rational::from_integer(4.into()) * &trace.pencil.b2
                / Rational::from_integer(3.into()))
            .to_string(),
            q: "2/3".to_string(),
            d: radicand.to_string(),
            decimal: None,
            real: false,
        },
    });
    report.g_lambda0 = trace
        .g_lambda0
        .as_ref()
        .map(|g| SurdJson::with_decimal(g, options.precision));
    report.a3_sq_over_4 = Some(trace.threshold.to_string());
    report.pencil = Some(PencilJson {
        b0: trace.pencil.b0.to_string(),
        b1: trace.pencil.b1.to_string(),
        b2: trace.pencil.b2.to_string(),
    });
    report.agreement.sylvester = Some(matrix_route_class(form) == reduced_class);
    report.agreement.mirrored_coeffs = trace.mirrored_coeffs_agree;

    if options.include_case {
        match classify_case(form) {
            Ok(case) => {
                let nature_case = quartic_root_nature(form).case();
                let consistent = nature_case == Some(case)
                    && table3_consistent(form, case)
                    && case.is_definite() == (reduced_class == VerdictClass::PositiveDefinite)
                    && case.is_semidefinite()
                        == matches!(
                            reduced_class,
                            VerdictClass::PositiveDefinite | VerdictClass::PositiveSemidefinite
                        );
                report.case = Some(CaseJson {
                    id: case.id(),
                    description: case.description().to_string(),
                });
                report.agreement.case = Some(consistent);
            }
            Err(_) => report.agreement.case = Some(false),
        }
    }

    if options.crosscheck {
        let weighted = to_weighted(form);
        let q = classical_quantities(&weighted);
        let pd = classical_is_pd(&weighted).expect("monic forms have c₀ = 1");
        report.classical = Some(ClassicalJson {
            G: q.g.to_string(),
            H: q.h.to_string(),
            I: q.i.to_string(),
            J: q.j.to_string(),
            Delta: q.delta.to_string(),
            aux: q.aux.to_string(),
            pd,
        });
        report.agreement.classical = Some(pd == (reduced_class == VerdictClass::PositiveDefinite));

        let est = circle_min_estimate(form, ORACLE_SAMPLES);
        report.oracle = Some(OracleJson {
            circle_min: est.min,
            argmin_theta: est.theta,
            samples: est.samples,
        });
        report.agreement.oracle = Some(oracle_agrees(reduced_class, est.min));
    }
    report
}

/// The advisory minimum may not contradict the exact class beyond the tolerance.
pub fn oracle_agrees(positive_side_class: VerdictClass, circle_min: f64) -> bool {
    match positive_side_class {
        VerdictClass::Indefinite => circle_min <= ORACLE_TOLERANCE,
        _ => circle_min >= -ORACLE_TOLERANCE,
    }
}

/// Human-readable summary.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<13}{v}\n"));
    line("input:", report.input.join(" "));
    line("verdict:", report.verdict.clone());
    if let Some(l) = &report.lambda0 {
        let exact = surd_text(&l.p, &l.q, &l.d);
        let v = match &l.decimal {
            Some(d) => format!("{exact} ≈ {d}"),
            None => format!("{exact} (not real)"),
        };
        line("lambda0:", v);
    }
    if let Some(g) = &report.g_lambda0 {
        line(
            "g(lambda0):",
            format!(
                "{} ≈ {}",
                surd_text(&g.p, &g.q, &g.d),
                g.decimal.clone().unwrap_or_default()
            ),
        );
    }
    if let Some(t) = &report.a3_sq_over_4 {
        line("a3^2/4:", t.clone());
    }
    if let Some(c) = &report.case {
        line("case:", format!("{} ({})", c.id, c.description));
    }
    if let (Some(m), Some(s)) = (&report.certificate, &report.certificate_scale) {
        line(
            "certificate:",
            format!("f = {s} * v^T M v, v = (x^2, xy, y^2), M ="),
        );
        for row in m {
            let cells: Vec<String> = row.iter().map(|e| surd_text(&e.p, &e.q, &e.d)).collect();
            line("", format!("[{}]", cells.join(", ")));
        }
    }
    if let Some(w) = &report.witnesses {
        line(
            "witnesses:",
            format!(
                "f({}, {}) > 0, f({}, {}) < 0",
                w.positive[0], w.positive[1], w.negative[0], w.negative[1]
            ),
        );
    }
    if let Some(c) = &report.classical {
        line(
            "classical:",
            format!("pd = {}, Delta = {}, H = {}", c.pd, c.Delta, c.H),
        );
    }
    if let Some(o) = &report.oracle {
        line(
            "oracle:",
            format!("circle min {:.6e} over {} samples", o.circle_min, o.samples),
        );
    }
    let a = &report.agreement;
    let flag = |f: Option<bool>| match f {
        Some(true) => "ok",
        Some(false) => "MISMATCH",
        None => "-",
    };
    line(
        "agreement:",
        format!(
            "classical {}, oracle {}, sylvester {}, case {}, mirrored {}",
            flag(a.classical),
            flag(a.oracle),
            flag(a.sylvester),
            flag(a.case),
            flag(a.mirrored_coeffs)
        ),
    );
    out
}

fn surd_text(p: &str, q: &str, d: &str) -> String {
    if q == "0" {
        p.to_string()
    } else if p == "0" {
        format!("{q}*sqrt({d})")
    } else if let Some(magnitude) = q.strip_prefix('-') {
        format!("{p} - {magnitude}*sqrt({d})")
    } else {
        format!("{p} + {q}*sqrt({d})")
    }
}
