use std::process::{Command, Output};

fn bwdb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwdb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bwdb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    bwdb(args).status.code().unwrap()
}

#[test]
fn generate_examples() {
    assert_eq!(
        stdout(&["generate", "--n", "3", "--k", "4", "--wmin", "9"]),
        "14423424324433343444"
    );
    assert_eq!(stdout(&["generate", "--n", "4", "--k", "2"]), "1111211221212222");
    assert_eq!(stdout(&["generate", "--n", "3", "--k", "3", "--wmax", "5"]), "3112212111");
    assert_eq!(
        stdout(&["generate", "--n", "3", "--k", "3", "--wmin", "7", "--format", "dotted"]),
        "1.3.3.2.2.3.2.3.3.3"
    );
}

#[test]
fn large_alphabets_print_dotted() {
    let out = stdout(&["generate", "--n", "2", "--k", "11", "--wmin", "21"]);
    assert_eq!(out, "10.11.11");
    assert_eq!(code(&["generate", "--n", "2", "--k", "11", "--format", "digits"]), 1);
}

#[test]
fn rank_and_unrank() {
    assert_eq!(stdout(&["rank", "--n", "4", "--k", "2", "--string", "2112"]), "5");
    assert_eq!(stdout(&["rank", "--n", "4", "--k", "2", "--string", "2211"]), "15");
    assert_eq!(
        stdout(&["unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "3"]),
        "423"
    );
    let json = stdout(&["rank", "--n", "3", "--k", "4", "--wmin", "9", "--string", "423", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rank"], "3");
    assert_eq!(v["string"], serde_json::json!([4, 2, 3]));
}

#[test]
fn subset_and_multiset() {
    assert_eq!(stdout(&["subset", "unrank", "--n", "5", "--t", "3", "--rank", "4"]), "{2,4,5}");
    assert_eq!(stdout(&["subset", "rank", "--n", "5", "--t", "3", "--set", "1,4,5"]), "10");
    assert_eq!(stdout(&["subset", "encode", "--n", "5", "--t", "3", "--set", "{3,4,5}"]), "311");
    assert_eq!(stdout(&["subset", "decode", "--n", "5", "--t", "3", "--string", "112"]), "{1,2,4}");
    assert_eq!(stdout(&["multiset", "unrank", "--n", "3", "--t", "3", "--rank", "1"]), "{2,2,2}");
    assert_eq!(stdout(&["multiset", "rank", "--n", "3", "--t", "3", "--set", "0,0,2"]), "9");
    assert_eq!(stdout(&["multiset", "encode", "--n", "3", "--t", "3", "--set", "0,1,2"]), "122");
    assert_eq!(stdout(&["multiset", "decode", "--n", "3", "--t", "3", "--string", "311"]), "{2,2,2}");
}

#[test]
fn necklace_listing() {
    assert_eq!(
        stdout(&["necklaces", "--n", "4", "--k", "2", "--wmin", "6"]),
        "1122\n1212\n1222\n2222"
    );
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(code(&["rank", "--n", "3", "--k", "4", "--bogus"]), 1);
    assert_eq!(code(&["rank", "--n", "3", "--k", "4"]), 1);
    assert_eq!(code(&["generate", "--n", "3", "--k", "4", "--wmin", "9", "--wmax", "9"]), 1);
    assert_eq!(code(&["unrank", "--n", "3", "--k", "4", "--rank", "x"]), 1);
    assert_eq!(code(&["subset", "rank", "--n", "5", "--t", "3"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);

    // constraint violations
    assert_eq!(code(&["generate", "--n", "3", "--k", "4", "--wmin", "13"]), 2);
    assert_eq!(code(&["generate", "--n", "3", "--k", "4", "--wmax", "2"]), 2);
    assert_eq!(code(&["rank", "--n", "3", "--k", "4", "--wmin", "9", "--string", "133"]), 2);
    assert_eq!(code(&["rank", "--n", "3", "--k", "4", "--string", "1234"]), 2);
    assert_eq!(code(&["rank", "--n", "3", "--k", "4", "--string", "153"]), 2);
    assert_eq!(code(&["unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "21"]), 2);
    assert_eq!(code(&["unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "0"]), 2);
    assert_eq!(code(&["subset", "rank", "--n", "5", "--t", "3", "--set", "1,1,2"]), 2);

    let out = bwdb(&["rank", "--n", "3", "--k", "4", "--wmin", "9", "--string", "133"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn selftest_passes() {
    let out = stdout(&["selftest", "--max-n", "3", "--max-k", "3"]);
    assert!(out.ends_with("0 failed"), "{out}");
}
