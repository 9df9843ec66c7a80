use std::process::Command;

use eisen::EInt;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn eisen(args: &str) -> Run {
    let argv = std::iter::once("eisen").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = eisen::cli::run(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn ok(args: &str) -> String {
    let r = eisen(args);
    assert_eq!(r.code, 0, "{args}: {}", r.stderr);
    r.stdout.trim_end().to_string()
}

fn json(args: &str) -> Value {
    serde_json::from_str(&ok(&format!("--json {args}"))).unwrap_or_else(|e| panic!("{args}: {e}"))
}

fn e(s: &str) -> EInt {
    s.parse().unwrap()
}

#[test]
fn arithmetic_golden() {
    let cases = [
        ("add 2+p 3-p", "5"),
        ("mul 2+p 1-p", "3"),
        ("norm 5+2p", "19"),
        ("conj 2+p", "1-p"),
        ("parity 4+p", "Odd2"),
        ("divrem 7+3p 2", "4+2p -1-p"),
        ("gcd 6 4+2p", "4+2p"),
        ("extgcd 6 2+p", "2+p 0 1"),
        ("factor 48-72p", "(-1-p) * (2+p)^2 * (2)^3 * (5+2p)"),
        ("factor 48-72p --unit-style beta", "(1-p)^2 * (2)^3 * (5+2p)"),
        ("is-prime 5+2p", "true split"),
        ("is-prime 7", "false"),
        ("split-prime 13", "4+p 4+3p"),
    ];
    for (args, expected) in cases {
        assert_eq!(ok(args), expected, "{args}");
    }
}

#[test]
fn residue_golden() {
    let cases = [
        ("reduce 17-3p --mod 8+5p", "12"),
        ("inverse 2 --mod 5", "3"),
        ("powmod 2 4 --mod 5", "1"),
        ("phi 48-72p", "5184"),
        ("euler-fermat 2 --mod 5", "true"),
        ("order 2 --mod 7", "3"),
        ("group 0-6p", "Z3 x Z6 (order 18, not cyclic)"),
        ("primitive-roots 7", "none (not cyclic)"),
        ("primitive-roots 2+p", "2"),
        ("coprime-parts 3+p 3", "true 19+18p"),
        ("units --mod 3", "1\n2\np\n1+p\n2p\n2+2p"),
        ("residues 2+p 2", "0\n1\n2\np\n1+p\n2+p\n2p\n1+2p\n2+2p"),
        ("scan-phi --max-norm 12", "1: 1\n2: 2+p\n3: 2\n6: 3+p 3+2p 3 4+2p\nmissing even: 4"),
    ];
    for (args, expected) in cases {
        assert_eq!(ok(args), expected, "{args}");
    }
}

#[test]
fn flags_work_before_and_after_the_subcommand() {
    assert_eq!(ok("--mod 8+5p reduce 17-3p"), "12");
    assert_eq!(ok("reduce --mod 8+5p 17-3p"), "12");
    assert_eq!(ok("group --json 0-6p"), ok("--json group 0-6p"));
}

#[test]
fn leading_minus_literals() {
    assert_eq!(ok("norm -7"), "49");
    assert_eq!(ok("norm --lit -1-p"), "1");
    assert_eq!(ok("norm -- -1-p"), "1");
    assert_eq!(ok("add 3 --lit -2p"), "3-2p");
    assert_eq!(ok("reduce 5 --mod -2-p"), ok("reduce 5 --mod 2+p"));
}

#[test]
fn json_outputs_are_well_formed() {
    assert_eq!(json("group 0-6p"), serde_json::json!({"order": 18, "invariant_factors": [3, 6], "cyclic": false}));
    let f = json("factor 48-72p");
    assert_eq!(f["unit"], "-1-p");
    assert_eq!(f["factors"][0], serde_json::json!({"prime": "2+p", "exponent": 2}));
    let p = json("phi 6");
    assert_eq!(p["value"], 18);
    let parts: u64 = p["breakdown"].as_array().unwrap().iter().map(|b| b["contribution"].as_u64().unwrap()).product();
    assert_eq!(parts, 18);
    assert_eq!(json("units --mod 3").as_array().unwrap().len(), 6);
    assert_eq!(json("primitive-roots 7"), serde_json::json!([]));
    for args in ["norm 5+2p", "parity 2+p", "divrem 7+3p 2", "extgcd 6 2+p", "is-prime 7", "split-prime 7", "residues 2 1", "scan-phi --max-norm 30", "order 2 --mod 7", "coprime-parts 3+p 2"] {
        json(args);
    }
}

#[test]
fn text_outputs_round_trip_through_the_parser() {
    let (q, r) = {
        let line = ok("divrem 48-72p 5+2p");
        let mut it = line.split(' ').map(e);
        (it.next().unwrap(), it.next().unwrap())
    };
    assert_eq!(q * e("5+2p") + r, e("48-72p"));

    let line = ok("extgcd 48-72p 7+p");
    let v: Vec<EInt> = line.split(' ').map(e).collect();
    assert_eq!(v[1] * e("48-72p") + v[2] * e("7+p"), v[0]);

    let factored = ok("factor 48-72p");
    let product = factored
        .split(" * ")
        .map(|term| {
            let term = term.trim_start_matches('(');
            let (base, exp) = match term.split_once(")^") {
                Some((b, k)) => (b, k.parse().unwrap()),
                None => (term.trim_end_matches(')'), 1),
            };
            e(base).try_pow(exp).unwrap()
        })
        .fold(EInt::ONE, |acc, z| acc * z);
    assert_eq!(product, e("48-72p"));

    for z in ok("units --mod 4+p").lines().map(e) {
        assert_eq!(ok(&format!("reduce {z} --mod 4+p")), z.to_string());
    }
}

#[test]
fn domain_errors_exit_1() {
    for args in ["inverse 3 --mod 3", "split-prime 5", "factor 0", "divrem 1 0", "phi 0", "order 3 --mod 3"] {
        let r = eisen(args);
        assert_eq!(r.code, 1, "{args}");
        assert!(r.stdout.is_empty());
        assert!(r.stderr.starts_with("error: "), "{args}: {}", r.stderr);
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in ["norm 2+", "norm", "norm 1 2", "reduce 3", "frob", "norm 2p+", "plot --kind nope --max-norm 5", "--unit-style odd factor 6"] {
        let r = eisen(args);
        assert_eq!(r.code, 2, "{args}");
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn help_and_version_exit_0() {
    assert!(ok("--help").contains("Commands:"));
    assert!(ok("--version").starts_with("eisen "));
    assert!(ok("help factor").contains("Unit times canonical prime powers"));
}

#[test]
fn plot_writes_svg() {
    let svg = ok("plot --kind parity --max-norm 7");
    assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>"));
    assert_eq!(svg.matches("data-z=").count(), 31);

    let path = std::env::temp_dir().join(format!("eisen-cli-{}.svg", std::process::id()));
    ok(&format!("plot --kind primes --max-norm 30 --out {}", path.display()));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("prime-split") && written.contains("prime-even"));
}

#[test]
fn binary_matches_library_entry_point() {
    let bin = env!("CARGO_BIN_EXE_eisen");
    let out = Command::new(bin).args(["--json", "group", "0-6p"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end(), ok("--json group 0-6p"));

    let out = Command::new(bin).args(["inverse", "3", "--mod", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).args(["norm", "2+"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
