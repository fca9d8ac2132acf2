use primorial::inequality::InequalityRow;
use primorial::VerificationReport;

pub(crate) fn rows_csv(rows: &[InequalityRow]) -> String {
    let mut out = String::from("n,lhs_log,rhs_log,ordering\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.9},{:.9},{}\n",
            r.n,
            r.lhs_log,
            r.rhs_log,
            r.ordering.as_str()
        ));
    }
    out
}

pub(crate) fn report_text(report: &VerificationReport) -> String {
    let relation = match report.relation {
        primorial::report::Relation::ProductGreater => ">",
        primorial::report::Relation::ProductLess => "<",
    };
    let mut s =
        format!(
        "family: {}\nchecked: prod(s_1..s_n) {relation} s_(n+1)^{} for n in {}..={} ({} terms)\n",
        report.family, report.exponent, report.n_range[0], report.n_range[1], report.sequence_length
    );
    if report.violations.is_empty() {
        s.push_str("violations: none\n");
    } else {
        let shown: Vec<String> = report
            .violations
            .iter()
            .take(20)
            .map(|v| v.to_string())
            .collect();
        let more = if report.violations.len() > 20 {
            ", ..."
        } else {
            ""
        };
        s.push_str(&format!(
            "violations ({}): {}{more}\n",
            report.violations.len(),
            shown.join(", ")
        ));
    }
    s.push_str(&format!(
        "empirical threshold: {} (observed within the checked range only)\n",
        report.empirical_threshold
    ));
    if report.probabilistic_primality {
        s.push_str("note: some terms were certified by probable-prime tests only\n");
    }
    s
}
