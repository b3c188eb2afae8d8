use super::{parse_script, run_script, ReportDocument, RunOptions, ScriptError};

/// Built-in scenarios, by name.
pub const SCENARIOS: [(&str, &str); 4] = [
    ("badintersect", include_str!("../../scenarios/badintersect.icl")),
    ("badcolon", include_str!("../../scenarios/badcolon.icl")),
    ("contain-demo", include_str!("../../scenarios/contain-demo.icl")),
    ("cmdvr-demo", include_str!("../../scenarios/cmdvr-demo.icl")),
];

pub fn scenario_source(name: &str) -> Result<&'static str, ScriptError> {
    SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| *src)
        .ok_or_else(|| ScriptError::UnknownScenario(name.to_string()))
}

/// Runs a built-in scenario with the given seed.
pub fn repro(name: &str, seed: u64) -> Result<ReportDocument, ScriptError> {
    let script = parse_script(scenario_source(name)?)?;
    let opts = RunOptions {
        scenario: name.to_string(),
        seed,
        ..RunOptions::default()
    };
    run_script(&script, &opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_scenario_passes() {
        for (name, _) in SCENARIOS {
            let doc = repro(name, 0).unwrap();
            assert!(doc.all_passed(), "{name}\n{}", doc.to_text());
        }
    }

    #[test]
    fn unknown_scenario_lists_names() {
        let err = repro("nope", 0).unwrap_err();
        let msg = err.to_string();
        for (name, _) in SCENARIOS {
            assert!(msg.contains(name));
        }
        assert_eq!(err.exit_code(), 2);
    }
}
