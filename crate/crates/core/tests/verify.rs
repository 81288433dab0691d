use qschubert::verify::{self, Config, Mode};

fn config(n: usize) -> Config {
    Config {
        n,
        ..Config::default()
    }
}

#[test]
fn cauchy_small_ranks_pass() {
    for n in 2..=3 {
        let reports = verify::run_suite("cauchy", &config(n)).unwrap();
        assert!(verify::all_passed(&reports), "n = {n}");
        assert!(reports.iter().all(|r| r.cases > 0));
    }
}

#[test]
fn sign_flip_is_detected() {
    let cfg = Config {
        mutate_e2: true,
        ..config(3)
    };
    let reports = verify::run_suite("cauchy", &cfg).unwrap();
    assert!(!verify::all_passed(&reports));
    assert!(!reports[0].failures.is_empty());
}

#[test]
fn reports_are_deterministic() {
    let strip = |n| {
        let mut v = serde_json::to_value(verify::run_suite("grassmannian", &config(n)).unwrap())
            .unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(strip(4), strip(4));
}

#[test]
fn report_field_order() {
    let reports = verify::run_suite("conjectures", &config(3)).unwrap();
    let text = serde_json::to_string(&reports[0]).unwrap();
    let keys = ["\"suite\"", "\"mode\"", "\"cases\"", "\"passed\"", "\"failures\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert!(text.ends_with(&format!("\"elapsed_ms\":{}}}", reports[0].elapsed_ms)));
}

#[test]
fn report_mode_misses_do_not_block() {
    let reports = verify::run_suite("vexillary", &config(4)).unwrap();
    let clipped = reports.iter().find(|r| r.suite == "vexillary-clipped").unwrap();
    assert_eq!(clipped.mode, Mode::Report);
    assert!(!clipped.passed);
    assert_eq!(clipped.outcomes.len(), clipped.cases);
    assert!(verify::all_passed(&reports));
}

#[test]
fn unknown_suite() {
    assert!(verify::run_suite("nosuch", &config(3)).is_err());
}
