use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lctransfer"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_stdin(args: &[&str], input: &str) -> (i32, String) {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn ok(args: &[&str], expected: &str) {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    assert_eq!(out.trim_end(), expected, "{args:?}");
}

fn domain_error(args: &[&str], code_name: &str) -> serde_json::Value {
    let (code, out, _) = run(args);
    assert_eq!(code, 1, "{args:?}: {out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], code_name, "{args:?}");
    v
}

fn usage_error(args: &[&str]) {
    let (code, out, err) = run(args);
    assert_eq!(code, 2, "{args:?}: {out}");
    assert!(out.is_empty());
    assert!(!err.is_empty());
}

#[test]
fn arithmetic() {
    ok(&["hilbert", "-1", "-1", "2"], r#"{"symbol":-1}"#);
    ok(&["hilbert", "-a", "-1", "-b", "-1", "-p", "2"], r#"{"symbol":-1}"#);
    ok(&["hilbert", "-1", "-1", "inf"], r#"{"symbol":-1}"#);
    ok(&["hilbert", "2", "7", "7"], r#"{"symbol":1}"#);
    ok(&["legendre", "--a", "2", "--p", "7"], r#"{"symbol":1}"#);
    ok(&["legendre", "--a", "3", "--p", "7"], r#"{"symbol":-1}"#);
    ok(&["reciprocity-support", "--a", "1", "--b", "1"], r#"{"places":["inf","2"],"product":1}"#);
    ok(&["reciprocity-support", "--a", "-1", "--b", "15"], r#"{"places":["inf","2","3","5"],"product":1}"#);
    ok(&["reciprocity-support", "--a", "7/3", "--b", "-2"], r#"{"places":["inf","2","3","7"],"product":1}"#);
    ok(&["valuation", "--x", "50", "--ell", "5"], r#"{"valuation":2}"#);
    ok(&["valuation", "--x", "3/25", "--ell", "5"], r#"{"valuation":-2}"#);
    ok(
        &["reduce", "--ell", "3", "--q", "5", "--x", r#"{"3":"1"}"#],
        r#"{"context":{"degree":2,"ell":3,"modulus":[1,0,1],"q":5,"sqrt_q_image":[0,1]},"value":[0,2]}"#,
    );
    ok(
        &["reduce", "--ell", "3", "--q", "4"],
        r#"{"context":{"degree":1,"ell":3,"modulus":[0,1],"q":4,"sqrt_q_image":[1]}}"#,
    );
    domain_error(&["reduce", "--ell", "3", "--q", "5", "--x", r#"{"1":"1/3"}"#], "NotIntegral");
    domain_error(&["valuation", "--x", "3", "--ell", "4"], "NotPrime");
}

#[test]
fn forms() {
    ok(&["profile", "--form", "1,1,1", "--place", "3"], r#"{"dim":3,"disc":"1","hasse":1,"place":"3"}"#);
    ok(&["profile", "--form", "-1,-1", "--place", "2"], r#"{"dim":2,"disc":"1","hasse":-1,"place":"2"}"#);
    ok(
        &["profile", "--form", "1,-1", "--place", "inf"],
        r#"{"dim":2,"disc":"-1","hasse":1,"place":"inf","signature":[1,1]}"#,
    );
    ok(&["equivalent", "--f", "1,1", "--g", "-1,-1", "--place", "inf"], r#"{"equivalent":false}"#);
    ok(&["equivalent", "--f", "1,1", "--g", "2,2", "--place", "5"], r#"{"equivalent":true}"#);
    ok(&["equivalent", "--f", "1,1,1,1", "--g", "1,1,2,2"], r#"{"equivalent":true}"#);
    ok(&["equivalent", "--f", "1,7", "--g", "-1,-7"], r#"{"equivalent":false}"#);
    ok(&["classify", "--form", "1,-1,1", "--place", "5"], r#"{"class":"split"}"#);
    ok(&["classify", "--form", "1,-1,1,-1", "--place", "3"], r#"{"class":"split"}"#);
    ok(&["classify", "--form", "1,-3", "--place", "5"], r#"{"alpha":"3","class":"quasi-split-nonsplit"}"#);
    ok(&["split-hasse", "--parity", "odd", "--n", "2", "--delta", "1", "--place", "3"], r#"{"hasse":1}"#);
    ok(&["split-hasse", "--parity", "odd", "--n", "2", "--delta", "1", "--place", "2"], r#"{"hasse":-1}"#);
    ok(&["split-hasse", "--parity", "even", "--n", "1", "--delta", "-1", "--place", "7"], r#"{"hasse":1}"#);
    ok(&["trace-hasse", "--n", "1", "--alpha", "-7", "--delta", "1", "--place", "7"], r#"{"hasse":1}"#);
    ok(&["trace-hasse", "--n", "2", "--alpha", "-1", "--delta", "-1", "--place", "2"], r#"{"hasse":-1}"#);
    ok(&["trace-hasse", "--n", "3", "--alpha", "2", "--delta", "1", "--place", "5"], r#"{"hasse":1}"#);
    ok(&["exists", "--kind", "odd", "--r", "2", "--n", "3"], r#"{"exists":true,"reason":"r*n(n+1)/2 = 12 is even"}"#);
    ok(
        &["exists", "--kind", "odd", "--r", "1", "--n", "1"],
        r#"{"exists":false,"min_r":2,"reason":"r*n(n+1)/2 = 1 is odd"}"#,
    );
    ok(
        &["exists", "--kind", "hermitian", "--r", "1", "--n", "2"],
        r#"{"exists":false,"min_r":2,"reason":"n is even and r*n/2 = 1 is odd"}"#,
    );
}

#[test]
fn globalization_and_certificates() {
    let v = domain_error(&["globalize", "--place", "3", "--dim", "3", "--disc", "1", "--hasse", "1"], "Obstruction");
    assert_eq!(v["min_r"], 2);
    let v = domain_error(&["globalize", "--kind", "hermitian", "--n", "2", "--alpha", "-1"], "Obstruction");
    assert_eq!(v["min_r"], 2);
    ok(
        &["globalize", "--kind", "hermitian", "--n", "4", "--alpha", "-3"],
        r#"{"alpha":"-3","dim":4,"kind":"hermitian","real":0,"signs":{},"support":[]}"#,
    );

    let cases: &[(&[&str], &str)] = &[
        (&["--place", "3", "--dim", "7", "--disc", "1", "--hasse", "1"], "2"),
        (&["--kind", "hermitian", "--n", "1", "--alpha", "-1", "--place", "3", "--sign", "1"], "5"),
        (&["--place", "5", "--dim", "4", "--disc", "2", "--hasse", "1"], "7"),
        (&["--place", "3", "--dim", "4", "--disc", "-1", "--hasse", "1"], "7"),
        (&["--place", "5", "--dim", "2", "--disc", "-1", "--hasse", "1"], "13"),
        (&["--kind", "hermitian", "--n", "1", "--alpha", "-1", "--place", "5", "--sign", "1"], "13"),
    ];
    for (args, aux) in cases {
        let mut full = vec!["globalize"];
        full.extend_from_slice(args);
        let (code, cert, err) = run(&full);
        assert_eq!(code, 0, "{full:?}: {err}");
        let cert = cert.trim_end();
        ok(&["check-cert", "--cert", cert], r#"{"failures":[],"ok":true,"quasi_split":true}"#);
        ok(&["aux-place", "--cert", cert], &format!(r#"{{"place":"{aux}"}}"#));
        // the certificate format round-trips
        let parsed: lctransfer::forms::GlobalCertificate = serde_json::from_str(cert).unwrap();
        assert_eq!(serde_json::to_value(&parsed).unwrap().to_string(), cert);
    }
}

#[test]
fn realize() {
    let cert = r#"{"dim":2,"disc":"1","kind":"quadratic-even","real":0,"signs":{},"support":[]}"#;
    ok(&["realize", "--cert", cert], r#"{"form":["1","1"]}"#);
    let cert = r#"{"dim":2,"disc":"1","kind":"quadratic-even","real":1,"signs":{"2":-1},"support":["2"]}"#;
    ok(&["realize", "--cert", cert], r#"{"form":["-1","-1"]}"#);
    let cert = r#"{"dim":2,"disc":"2","kind":"quadratic-even","real":0,"signs":{"2":1},"support":["2"]}"#;
    let (code, out, err) = run(&["realize", "--cert", cert]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let form: Vec<lctransfer::arith::Rational> = serde_json::from_value(v["form"].clone()).unwrap();
    let det = form.iter().fold(lctransfer::arith::Rational::from_int(1), |a, b| &a * b);
    ok(
        &["reciprocity-support", "--a", &det.to_string(), "--b", "1"],
        r#"{"places":["inf","2"],"product":1}"#,
    );
    assert_eq!(
        lctransfer::arith::hilbert::squarefree_kernel(&det).unwrap(),
        2.into(),
        "determinant {det} is not 2 up to squares"
    );
}

#[test]
fn satake() {
    ok(
        &["transfer", "--group", "Sp2", "--q", "3", "--chars", r#"[{"0":"1"}]"#],
        r#"{"N":3,"eigenvalues":[{"0":"1"},{"0":"1"},{"0":"1"}],"q":3,"q_target":3}"#,
    );
    ok(
        &["transfer", "--group", "SO5", "--q", "5", "--chars", r#"[{"-1":"1"},{"1":"1"}]"#],
        r#"{"N":4,"eigenvalues":[{"-1":"1"},{"-1":"1"},{"1":"1"},{"1":"1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["transfer", "--group", "SO4-ns", "--q", "5", "--chars", r#"[{"0":"2"}]"#],
        r#"{"N":4,"eigenvalues":[{"0":"1/2"},{"0":"1"},{"0":"1"},{"0":"2"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["charpoly", "--q", "5", "--eig", r#"[{"0":"1"},{"0":"1"}]"#],
        r#"{"coefficients":[{"0":"1"},{"0":"-2"},{"0":"1"}]}"#,
    );
    ok(
        &["charpoly", "--q", "5", "--eig", r#"[{"2":"1"},{"-2":"1"},{"0":"1"}]"#],
        r#"{"coefficients":[{"0":"-1"},{"-2":"1","0":"1","2":"1"},{"-2":"-1","0":"-1","2":"-1"},{"0":"1"}]}"#,
    );
    ok(&["integral", "--ell", "3", "--q", "5", "--eig", r#"[{"3":"1"},{"-3":"1"}]"#], r#"{"integral":true}"#);
    ok(&["integral", "--ell", "3", "--q", "5", "--eig", r#"[{"1":"3"},{"-1":"1/3"}]"#], r#"{"integral":false}"#);
    ok(
        &["integral", "--ell", "7", "--q", "5", "--group", "Sp2", "--chars", r#"[{"0":"5"}]"#],
        r#"{"integral":true}"#,
    );
    let half = r#"[{"1":"1"},{"-1":"1"},{"1":"1"},{"-1":"1"}]"#;
    let mixed = r#"[{"1":"1"},{"-1":"1"},{"3":"1"},{"-3":"1"}]"#;
    ok(&["congruent", "--q", "5", "--ell", "3", "--eig1", half, "--eig2", half], r#"{"congruent":true}"#);
    ok(&["congruent", "--q", "5", "--ell", "3", "--eig1", half, "--eig2", mixed], r#"{"congruent":true}"#);
    ok(
        &["congruent", "--q", "5", "--ell", "3", "--eig1", r#"[{"0":"1"},{"0":"1"}]"#, "--eig2", r#"[{"0":"1"},{"2":"1"}]"#],
        r#"{"congruent":false}"#,
    );
    ok(
        &["support", "--group", "SO5", "--q", "5", "--ell", "3", "--chars1", r#"[{"-1":"1"},{"1":"1"}]"#, "--chars2", r#"[{"3":"1"},{"1":"1"}]"#],
        r#"{"same_support":true}"#,
    );
    ok(
        &["support", "--group", "Sp2", "--q", "5", "--ell", "7", "--chars1", r#"[{"0":"2"}]"#, "--chars2", r#"[{"0":"3"}]"#],
        r#"{"same_support":false}"#,
    );
    ok(
        &["flip", "--group", "Sp2", "--q", "5", "--eig", r#"[{"0":"2"},{"0":"1"},{"0":"1/2"}]"#],
        r#"{"N":3,"eigenvalues":[{"0":"1/2"},{"0":"1"},{"0":"2"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["flip", "--group", "SO4-ns", "--q", "5", "--eig", r#"[{"0":"2"},{"0":"1"},{"0":"1"},{"0":"1/2"}]"#],
        r#"{"N":4,"eigenvalues":[{"0":"-2"},{"0":"-1"},{"0":"-1"},{"0":"-1/2"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["flip", "--group", "U3", "--q", "5", "--q-target", "25", "--eig", r#"[{"0":"2"},{"0":"1"},{"0":"1/2"}]"#],
        r#"{"N":3,"eigenvalues":[{"0":"1/2"},{"0":"1"},{"0":"2"}],"q":5,"q_target":25}"#,
    );
    ok(&["modulus-exponents", "--group", "Sp2", "--q", "5", "--m", "1"], r#"{"exponents":["1"]}"#);
    ok(&["modulus-exponents", "--group", "SO5", "--q", "5", "--m", "2"], r#"{"exponents":["3/2","1/2"]}"#);
    ok(&["modulus-exponents", "--group", "U3", "--q", "5", "--m", "1"], r#"{"exponents":["1"]}"#);
    ok(
        &["base-change", "--q", "5", "--eig", r#"[{"1":"1"},{"-1":"1"}]"#, "--f", "2", "--d", "2"],
        r#"{"N":2,"eigenvalues":[{"-2":"1"},{"2":"1"}],"q":5,"q_target":25}"#,
    );
    ok(
        &["base-change", "--q", "5", "--eig", r#"[{"0":"2"}]"#, "--f", "3", "--d", "3"],
        r#"{"N":1,"eigenvalues":[{"0":"8"}],"q":5,"q_target":125}"#,
    );
    ok(
        &["base-change", "--q", "5", "--eig", r#"[{"1":"1"},{"-1":"1"}]"#, "--f", "1", "--d", "3"],
        r#"{"N":2,"eigenvalues":[{"-1":"1"},{"1":"1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["so2", "--q", "5", "--c", r#"{"1":"1"}"#],
        r#"{"N":2,"degenerate_character":{"0":"1"},"eigenvalues":[{"-1":"1"},{"1":"1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["so2", "--q", "5", "--c", r#"{"-1":"-1"}"#],
        r#"{"N":2,"degenerate_character":{"0":"-1"},"eigenvalues":[{"-1":"-1"},{"1":"-1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["so2", "--q", "5", "--c", r#"{"2":"1"}"#],
        r#"{"N":2,"eigenvalues":[{"-2":"1"},{"2":"1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["det-twist", "--q", "5", "--eig", r#"[{"0":"1"},{"0":"1"}]"#, "--k", "-1/2"],
        r#"{"N":2,"eigenvalues":[{"-1":"1"},{"-1":"1"}],"q":5,"q_target":5}"#,
    );
    ok(&["is-selfdual", "--q", "5", "--eig", r#"[{"2":"1"}]"#], r#"{"selfdual":false}"#);
    ok(&["is-selfdual", "--q", "5", "--eig", r#"[{"0":"1"}]"#], r#"{"selfdual":true}"#);
}

#[test]
fn weil_deligne() {
    let model = r#"{"q":5,"frobenius":[[{"0":"1"},{}],[{},{"2":"1"}]],"nilpotent":[[{},{"0":"1"}],[{},{}]]}"#;
    ok(
        &["wd-validate", "--rep", model],
        r#"{"commutation":true,"defects":[],"frobenius_invertible":true,"nilpotent":true,"valid":true}"#,
    );
    let bad = r#"{"q":5,"frobenius":[[{"0":"1"},{}],[{},{"0":"1"}]],"nilpotent":[[{},{"0":"1"}],[{},{}]]}"#;
    ok(
        &["wd-validate", "--rep", bad],
        r#"{"commutation":false,"defects":["F N F^-1 differs from q^-1 N"],"frobenius_invertible":true,"nilpotent":true,"valid":false}"#,
    );
    let unipotent = r#"{"q":5,"frobenius":[[{"0":"1"},{"0":"1"}],[{},{"0":"1"}]]}"#;
    let identity = r#"{"frobenius":[[{"0":"1"},{}],[{},{"0":"1"}]],"nilpotent":[[{},{}],[{},{}]],"q":5}"#;
    ok(&["wd-ss", "--rep", unipotent], identity);
    ok(
        &["wd-ss", "--rep", r#"{"q":5,"frobenius":[[{"0":"3"},{"0":"1"}],[{},{"0":"3"}]]}"#],
        r#"{"frobenius":[[{"0":"3"},{}],[{},{"0":"3"}]],"nilpotent":[[{},{}],[{},{}]],"q":5}"#,
    );
    domain_error(&["wd-to-param", "--rep", unipotent], "UnsupportedSpectrum");
    ok(
        &["wd-to-param", "--rep", identity],
        r#"{"N":2,"eigenvalues":[{"0":"1"},{"0":"1"}],"q":5,"q_target":5}"#,
    );
    ok(
        &["wd-from-param", "--q", "5", "--eig", r#"[{"1":"1"},{"-1":"1"}]"#],
        r#"{"frobenius":[[{"-1":"1"},{}],[{},{"1":"1"}]],"nilpotent":[[{},{}],[{},{}]],"q":5}"#,
    );
    ok(
        &["wd-integral", "--ell", "3", "--rep", r#"{"q":5,"frobenius":[[{"0":"1"},{"0":"1/9"}],[{},{"0":"1"}]]}"#],
        r#"{"rep":{"frobenius":[[{"0":"1"},{"0":"1"}],[{},{"0":"1"}]],"nilpotent":[[{},{}],[{},{}]],"q":5},"v":2,"witness":[[{"0":"9"},{}],[{},{"0":"1"}]]}"#,
    );
    let one = r#"{"q":5,"frobenius":[[{"0":"1"}]]}"#;
    let q = r#"{"q":5,"frobenius":[[{"2":"1"}]]}"#;
    ok(&["wd-congruent", "--ell", "3", "--rep1", one, "--rep2", one], r#"{"congruent":true}"#);
    ok(&["wd-congruent", "--ell", "3", "--rep1", one, "--rep2", q], r#"{"congruent":false}"#);
    ok(
        &["wd-reduce", "--ell", "3", "--rep", q],
        r#"{"context":{"degree":2,"ell":3,"modulus":[1,0,1],"q":5,"sqrt_q_image":[0,1]},"eigenvalues":[[2,0]]}"#,
    );
}

#[test]
fn finite_groups() {
    ok(&["green", "--q", "3", "--k", "1"], r#"{"regular":true}"#);
    ok(&["green", "--q", "3", "--k", "4"], r#"{"regular":false}"#);
    ok(&["green", "--q", "3", "--k", "0"], r#"{"regular":false}"#);
    ok(
        &["green", "--q", "3", "--k", "1", "--class", "identity"],
        r#"{"value":{"integer":2,"modulus":8,"terms":{"0":2}}}"#,
    );
    ok(
        &["green", "--q", "3", "--k", "1", "--class", "elliptic:1"],
        r#"{"value":{"modulus":8,"terms":{"1":-1,"3":-1}}}"#,
    );
    ok(
        &["green", "--q", "3", "--k", "1", "--class", "central:4"],
        r#"{"value":{"integer":-2,"modulus":8,"terms":{"0":-2}}}"#,
    );
    domain_error(&["green", "--q", "3", "--k", "4", "--class", "identity"], "NotRegular");
    ok(&["green-congruent", "--q", "5", "--k1", "3", "--k2", "11", "--ell", "3"], r#"{"congruent":true}"#);
    ok(&["green-congruent", "--q", "5", "--k1", "3", "--k2", "4", "--ell", "3"], r#"{"congruent":false}"#);
    ok(&["bc-length", "--q", "3", "--k", "2"], r#"{"e":2}"#);
    ok(&["bc-length", "--q", "3", "--k", "1"], r#"{"e":1}"#);
    ok(&["bc-length", "--q", "5", "--k", "3"], r#"{"e":2}"#);
    ok(&["normal-form", "--q", "2", "--a", "1,1,1"], r#"{"a":1}"#);
    ok(&["normal-form", "--q", "4", "--a", "2,2,2"], r#"{"a":2}"#);
    ok(&["iwahori-action", "--q", "4", "--chi", "1,1", "--u", "2,3,2"], r#"{"u":[2,3,2]}"#);
    ok(&["iwahori-action", "--q", "4", "--chi", "2", "--u", "1,3"], r#"{"u":[3,1]}"#);
    ok(&["kloosterman", "--q", "2", "--u", "1,1", "--a", "1"], r#"{"value":1}"#);
    ok(&["kloosterman", "--q", "2", "--u", "1,1,1", "--a", "1"], r#"{"value":-1}"#);
    ok(&["kloosterman", "--q", "4", "--u", "1,1", "--a", "1"], r#"{"value":3}"#);
    ok(&["simple-orbits", "--p", "2", "--q", "2", "--n", "3"], r#"{"count":1,"enumerated":1,"n":3,"p":2,"q":2}"#);
    ok(&["simple-orbits", "--p", "2", "--q", "4", "--n", "2"], r#"{"count":3,"enumerated":3,"n":2,"p":2,"q":4}"#);
    ok(&["simple-orbits", "--p", "3", "--q", "3", "--n", "2"], r#"{"count":8,"n":2,"p":3,"q":3}"#);
    ok(
        &["selfdual-params", "--q", "2", "--r", "1"],
        r#"{"params":[{"charpoly":[1,1,1],"exponent":{"k":1,"modulus":3}},{"charpoly":[1,1,1],"exponent":{"k":2,"modulus":3}}]}"#,
    );
    ok(
        &["selfdual-params", "--q", "3", "--r", "1"],
        r#"{"params":[{"charpoly":[1,0,1],"exponent":{"k":2,"modulus":8}},{"charpoly":[1,0,1],"exponent":{"k":6,"modulus":8}}]}"#,
    );
    let (code, out, _) = run(&["selfdual-params", "--q", "2", "--r", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let params = v["params"].as_array().unwrap();
    assert_eq!(params.len(), 4);
    assert!(params.iter().all(|p| p["charpoly"] == serde_json::json!([1, 1, 1, 1, 1])));
}

#[test]
fn repro_scenarios() {
    let (code, out, _) = run(&["repro", "remark-6.4", "--q", "5", "--ell", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"congruent_transfers\":true,\"params_equal\":false,\"pass\":true}\n");
    for (q, ell) in [("5", "3"), ("11", "3"), ("9", "5"), ("13", "7")] {
        let (code, out, _) = run(&["repro", "so2", "--q", q, "--ell", ell]);
        assert_eq!(code, 0, "q={q} ell={ell}: {out}");
        assert!(out.contains(r#""pass":true"#));
    }
    domain_error(&["repro", "so2", "--q", "5", "--ell", "5"], "InvalidInput");
    let (code, out, _) = run(&["repro", "kloosterman-odd"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("\"pass\":true}\n"));
}

#[test]
fn exit_codes() {
    usage_error(&["hilbert", "-a", "0", "-b", "1", "-p", "3"]);
    usage_error(&["hilbert", "0", "1", "3"]);
    usage_error(&["hilbert", "-1", "-1"]);
    usage_error(&["hilbert", "-a", "1.5", "-b", "1", "-p", "3"]);
    usage_error(&["no-such-command"]);
    usage_error(&["transfer", "--group", "SO5", "--q", "5", "--chars", "not json"]);
    usage_error(&["globalize", "--dim", "3"]);
    let v = domain_error(
        &["congruent", "--q", "5", "--ell", "3", "--eig1", r#"[{"0":"1"}]"#, "--eig2", r#"[{"0":"1"},{"0":"1"}]"#],
        "ShapeMismatch",
    );
    assert!(v["message"].is_string());
    usage_error(&["hilbert", "-1", "-1", "4"]);
    domain_error(&["legendre", "--a", "3", "--p", "9"], "NotPrime");
    domain_error(&["transfer", "--group", "SO5", "--q", "6", "--chars", r#"[{"0":"1"},{"0":"1"}]"#], "NotPrime");
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("repro"));
}

#[test]
fn stdin_mode() {
    let (code, out) = run_stdin(&["hilbert", "--stdin"], r#"{"a":"-1","b":"-1","place":"2"}"#);
    assert_eq!((code, out.as_str()), (0, "{\"symbol\":-1}\n"));
    let (code, out) = run_stdin(
        &["transfer", "--stdin"],
        r#"{"group":"SO5","q":5,"chars":[{"-1":"1"},{"1":"1"}]}"#,
    );
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"N":4,"#));
    let (code, _) = run_stdin(&["hilbert", "--stdin"], "[1,2]");
    assert_eq!(code, 2);
}

#[test]
fn aux_bound_from_environment() {
    let cert = r#"{"alpha":"-1","dim":1,"kind":"hermitian","real":0,"signs":{"3":1},"support":["3"]}"#;
    let out = bin().args(["aux-place", "--cert", cert]).env("LCTRANSFER_AUX_BOUND", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "SearchExhausted");
    assert_eq!(v["bound"], 4);
    let out = bin().args(["aux-place", "--cert", cert]).env("LCTRANSFER_AUX_BOUND", "x").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
