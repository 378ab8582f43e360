//! End-to-end checks of the `ccode` binary: frozen outputs, the exit-code
//! contract, and byte-level reproducibility of the CSV commands.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ccode"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn field_table_golden() {
    let (stdout, _, code) = run(&["field", "table", "2^2:111"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "field: F_4 (2^2:111)\n\
         p: 2  m: 2\n\
         prime_poly: 1+x+x^2\n\
         alpha: 2\n\
         \n\
         add:\n\
         0 1 2 3\n\
         1 0 3 2\n\
         2 3 0 1\n\
         3 2 1 0\n\
         \n\
         mul:\n\
         0 0 0 0\n\
         0 1 2 3\n\
         0 2 3 1\n\
         0 3 1 2\n"
    );
}

#[test]
fn cyclic_new_golden() {
    let (stdout, _, code) = run(&["cyclic", "new", "--n", "15", "--g", "11001"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n: 15\n\
         k: 11\n\
         g: 1+x+x^4\n\
         h: 1+x+x^2+x^3+x^5+x^7+x^8+x^11\n\
         G:\n\
         110010000000000\n\
         011001000000000\n\
         001100100000000\n\
         000110010000000\n\
         000011001000000\n\
         000001100100000\n\
         000000110010000\n\
         000000011001000\n\
         000000001100100\n\
         000000000110010\n\
         000000000011001\n\
         H:\n\
         100110101111000\n\
         010011010111100\n\
         001001101011110\n\
         000100110101111\n"
    );
}

#[test]
fn exact_rep5_matches_benchmark() {
    let (stdout, _, code) = run(&[
        "exact", "--scheme", "rep:5", "--family", "bsc", "--deltas", "0.11,0.2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "delta,pe\n0.11,1.12104806000e-2\n0.2,5.79200000000e-2\n"
    );
}

#[test]
fn search_default_grid_golden() {
    let (stdout, _, code) = run(&["search", "--channel", "bsc:0.11"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,size,rate,best_pe,pcb,best_code\n\
         2,2,0.500000,1.10000000000e-1,2.35451464146e-11,00|10\n\
         2,3,0.792481,1.75266666667e-1,2.66590731977e-18,00|10|01\n\
         3,2,0.333333,3.36380000000e-2,8.30956242995e-3,000|111\n\
         3,3,0.528321,1.49812666667e-1,1.35533994207e-10,000|110|111\n\
         4,2,0.250000,3.36380000000e-2,2.75222297720e-2,1000|1111\n\
         4,3,0.396241,1.04504546667e-1,9.26094792447e-6,1000|0111|1111\n\
         5,2,0.200000,1.12104806000e-2,3.87903571091e-1,00100|11011\n\
         5,3,0.316993,5.91964266667e-2,5.94172426540e-3,00010|10001|01101\n"
    );
    // The best pair at n = 5 must do at least as well as the repetition
    // pair, and here it matches it exactly (an antipodal distance-5 pair).
    assert!(stdout.contains("5,2,0.200000,1.12104806000e-2"));
}

#[test]
fn simulate_single_worker_golden() {
    let (stdout, _, code) = run(&[
        "simulate", "--scheme", "rep:5", "--family", "bsc", "--deltas", "0.11", "--trials",
        "100000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "delta,trials,seed,cw_errors,info_errors,cw_rate,info_rate\n\
         0.11,100000,0,1135,1135,1.13500000000e-2,1.13500000000e-2\n"
    );
}

#[test]
fn simulate_identical_across_runs() {
    let args = [
        "simulate", "--scheme", "bch:4:11", "--family", "bsc", "--deltas", "0.05,0.11",
        "--trials", "20000", "--workers", "4", "--seed", "42",
    ];
    let (first, _, c1) = run(&args);
    let (second, _, c2) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(first, second);
    assert!(first.lines().count() == 3);
}

#[test]
fn bound_row_golden() {
    let (stdout, _, code) = run(&["bound", "--codes", "rep:3", "--deltas", "0.05"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "delta,code,rate,method,pe,union_bound,pcb\n\
         0.05,rep:3,0.333333,exact,7.25000000000e-3,8.28190799273e-2,3.61065009224e-1\n"
    );
}

#[test]
fn bch_decode_round_trip() {
    // Two flips land back on the transmitted codeword.
    let (stdout, _, code) = run(&[
        "bch", "decode", "--m", "4", "--rs-k", "11", "--y", "101010011011111",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "status: ok\n\
         corrected: 2\n\
         codeword: 100010011010111\n\
         error: 001000000001000\n\
         info: 1000001\n"
    );
}

#[test]
fn rs_erasure_decode_cli() {
    let (stdout, _, code) = run(&[
        "rs", "decode-erasures", "--field", "5", "--k", "2", "--y", "4e2e",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "status: ok\ninfo: 31\ncodeword: 4021\n");
}

#[test]
fn decode_failures_are_results_not_errors() {
    // An uncorrectable word and an undecodable erasure pattern are computed
    // outcomes: status on stdout, exit 0.
    let (stdout, _, code) = run(&[
        "bch", "decode", "--m", "4", "--rs-k", "12", "--y", "110100000000000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "status: uncorrectable\n");

    let (stdout, _, code) = run(&[
        "rs", "decode-erasures", "--field", "5", "--k", "2", "--y", "4eee",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("status: failed:"));
}

#[test]
fn exit_one_on_domain_errors() {
    // Reducible prime polynomial.
    let (_, stderr, code) = run(&["field", "table", "2^2:101"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("reducible"));

    // Generator polynomial that does not divide x^n - 1.
    let (_, stderr, code) = run(&["cyclic", "new", "--n", "15", "--g", "101"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("does not divide"));

    // Demonstration cap on the search grid.
    let (_, stderr, code) = run(&["search", "--n-max", "7"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--full"));
}

#[test]
fn exit_two_on_usage_errors() {
    let (_, _, code) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["simulate", "--scheme", "rep:5"]);
    assert_eq!(code, 2); // missing --deltas
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let (stdout, _, code) = run(&["search"]);
    assert_eq!(code, 0);
    let (piped, _, code) = run(&["search", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(piped.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}
