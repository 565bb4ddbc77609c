//! One line per acceptance criterion, each backed by verification cases run
//! at the default bounds. Exits nonzero if any criterion fails.

use std::process::ExitCode;

use heiscat::suite::{run_case, CaseStatus, SuiteConfig, VerificationCase};
use serde_json::json;

struct Criterion {
    name: &'static str,
    /// Case id and the bound it must have been run with.
    cases: &'static [(&'static str, &'static [(&'static str, u64)])],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "1 symmetric-function multiplication matches the polynomial oracle",
        cases: &[("multiply-oracle", &[("max_degree", 5), ("nvars", 10)])],
    },
    Criterion {
        name: "2 m/h duality and Schur self-duality",
        cases: &[("pairing-duality", &[("max_degree", 6)])],
    },
    Criterion {
        name: "3 Hopf axioms, antipode law and Hopf pairing",
        cases: &[("hopf-axioms", &[("max_degree", 6)]), ("antipode", &[("max_degree", 6)])],
    },
    Criterion {
        name: "4 Weyl categorification squares and res ind - ind res = id",
        cases: &[("commutative-squares", &[("max_n", 10)]), ("weyl-relation", &[("max_n", 10)])],
    },
    Criterion {
        name: "5 nilcoxeter bimodule isomorphism",
        cases: &[("bimodule-iso", &[("max_n", 5)])],
    },
    Criterion {
        name: "6 Heisenberg relation, structurally and on Fock space",
        cases: &[("heisenberg-relation", &[("max_m", 4), ("max_n", 4), ("degree", 8)])],
    },
    Criterion {
        name: "7 boson relation over the rationals",
        cases: &[("boson-relation", &[("max_m", 3), ("max_n", 3), ("degree", 6)])],
    },
    Criterion {
        name: "8 weak Fock categorification and the character oracle",
        cases: &[
            ("weak-fock", &[("max_m", 3), ("max_n", 3), ("degree", 6)]),
            ("characters-vs-lr", &[("max_size", 6)]),
        ],
    },
    Criterion {
        name: "9 local relations in the bimodule model, circle and curl values",
        cases: &[("local-relations", &[("max_level", 3)]), ("closed-values", &[("max_level", 3)])],
    },
    Criterion {
        name: "10 Grothendieck group relations and Mackey decomposition",
        cases: &[("k0-relations", &[("max_m", 4), ("max_n", 4)]), ("mackey", &[("max_k", 4)])],
    },
];

fn judge(criterion: &Criterion, cfg: &SuiteConfig) -> Result<String, String> {
    let mut details = Vec::new();
    for (id, bounds) in criterion.cases {
        let case: VerificationCase = run_case(id, cfg).ok_or_else(|| format!("no case {id}"))?;
        for (key, value) in *bounds {
            if case.parameters.get(*key) != Some(&json!(value)) {
                return Err(format!("{id} ran with {key} = {:?}, expected {value}", case.parameters.get(*key)));
            }
        }
        if case.status != CaseStatus::Pass {
            return Err(format!("{id}: {:?}: {}", case.status, case.detail));
        }
        details.push(format!("{id}: {}", case.detail));
    }
    Ok(details.join("; "))
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for criterion in CRITERIA {
        match judge(criterion, &cfg) {
            Ok(detail) => println!("PASS  {}  ({detail})", criterion.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}  ({why})", criterion.name);
            }
        }
    }
    println!("{}/{} acceptance criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
