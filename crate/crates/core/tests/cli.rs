use std::process::Command;

use motivic_power::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("motivic-power").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn coefficients(stdout: &str) -> Vec<String> {
    stdout
        .lines()
        .enumerate()
        .map(|(n, line)| {
            let (power, coef) = line.split_once('\t').expect("t^n<TAB>coefficient");
            assert_eq!(power, format!("t^{n}"));
            coef.to_string()
        })
        .collect()
}

#[test]
fn surface_with_class_l_squared() {
    let (code, out, _) =
        invoke(&["hilbert", "--dim", "2", "--class", "L^2", "--truncate", "2", "--vars", "L", "--laurent"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "L^2", "L^4+L^3"]);
}

#[test]
fn euler_specialization_gives_partition_numbers() {
    let (code, out, _) = invoke(&["hilbert", "--dim", "2", "--class", "1", "--truncate", "6", "--specialize", "euler"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "1", "2", "3", "5", "7", "11"]);
}

#[test]
fn zeroth_power_is_one() {
    let (code, out, _) = invoke(&["pow", "--series", "1+t", "--exponent", "0", "--truncate", "3"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "0", "0", "0"]);
}

#[test]
fn configuration_space_of_a_line() {
    let (code, out, _) = invoke(&["pow", "--series", "1+t", "--exponent", "u", "--vars", "u", "--truncate", "2"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "u", "u^2-u"]);
}

#[test]
fn zeta_of_one_plus_uv() {
    let (code, out, _) = invoke(&["zeta", "--class", "1+u*v", "--vars", "u,v", "--truncate", "2"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "u*v+1", "u^2*v^2+u*v+1"]);
}

#[test]
fn hodge_specialization_maps_l_to_uv() {
    let (code, out, _) =
        invoke(&["hilbert", "--dim", "2", "--class", "u^2*v^2", "--truncate", "2", "--specialize", "hodge"]);
    assert_eq!(code, 0);
    assert_eq!(coefficients(&out), ["1", "u^2*v^2", "u^4*v^4+u^3*v^3"]);
}

#[test]
fn factor_then_assemble_through_json() {
    let (code, json, _) = invoke(&["factor", "--series", "1+t", "--truncate", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join(format!("motivic-power-cli-{}.json", std::process::id()));
    std::fs::write(&path, &json).unwrap();
    let (code, out, _) = invoke(&["assemble", "--exponents-json", path.to_str().unwrap(), "--truncate", "4"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0, "{out}");
    assert_eq!(coefficients(&out), ["1", "1", "0", "0", "0"]);
}

#[test]
fn checks_pass() {
    for args in [
        &["consistency", "--dim", "2", "--truncate", "6"][..],
        &["oracle-check", "--truncate", "5"],
        &["axioms", "--seed", "7", "--trials", "3", "--truncate", "5"],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        assert!(out.lines().filter(|l| !l.starts_with("seed ")).all(|l| l.starts_with("PASS")), "{out}");
    }
}

#[test]
fn axioms_are_deterministic_per_seed() {
    let args = ["axioms", "--seed", "11", "--trials", "4", "--truncate", "4", "--format", "json"];
    assert_eq!(invoke(&args), invoke(&args));
}

#[test]
fn errors_exit_with_status() {
    let (code, _, err) = invoke(&["pow", "--series", "1+w*t", "--exponent", "2", "--vars", "u"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown variable w"), "{err}");
    let (code, _, err) = invoke(&["pow", "--series", "2+t", "--exponent", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, _) = invoke(&["hilbert", "--dim", "3", "--class", "L^3"]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn binary_runs() {
    let output = Command::new(env!("CARGO_BIN_EXE_motivic-power"))
        .args(["zeta", "--class", "3", "--truncate", "3"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(coefficients(&String::from_utf8(output.stdout).unwrap()), ["1", "3", "6", "10"]);
}
