//! Builds the JSON document the command-line tool writes.

use hilbert_quasi::cli::{run, Format, ProblemSpec, RunOptions, SolutionDocument};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: ProblemSpec = serde_json::from_str(
        r#"{
            "weights": [3, 5, 7],
            "ideal": ["x1^2*x3", "[0, 3, 0]"],
            "eval": [100],
            "table": 12,
            "format": "json",
            "verify": true
        }"#,
    )?;
    let json = run(&spec, &RunOptions::default())?;
    print!("{json}");

    let doc: SolutionDocument = serde_json::from_str(&json)?;
    assert_eq!(serde_json::to_string_pretty(&doc)? + "\n", json);
    let text = run(
        &ProblemSpec {
            format: Format::Text,
            ..spec
        },
        &RunOptions::default(),
    )?;
    print!("{text}");
    Ok(())
}
