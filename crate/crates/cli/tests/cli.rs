use std::io::Write as _;
use std::process::Command;

use operad_forge::json::{sum_from_json, tree_from_json};
use operad_forge::{dispatch, Outcome};
use operad_forge_core::{compose_pl, parse_tree, Tree, TreeSum};

fn run(args: &[&str]) -> Outcome {
    dispatch(std::iter::once("operad-forge").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn golden_composition() {
    assert_eq!(
        ok(&["compose", "--operad", "pl", "-i", "2", "2(1,3)", "2(1)"]),
        "1*3(1,2,4) + 1*3(1,2(4)) + 1*3(2(1),4) + 1*3(2(1,4))\n"
    );
    assert_eq!(ok(&["compose", "--operad", "max", "-i", "2", "2(1,3)", "2(1)"]), "3(1,2(4))\n");
    assert_eq!(ok(&["compose", "--operad", "min", "-i", "2", "2(1,3)", "2(1)"]), "3(2(1),4)\n");
    assert_eq!(ok(&["compose", "--operad", "nap", "-i", "2", "2(1,3)", "2(1)"]), "3(1,2,4)\n");
}

#[test]
fn json_outputs_round_trip() {
    let text = ok(&["compose", "--operad", "pl", "-i", "2", "2(1,3)", "2(1)", "--json"]);
    let expected = compose_pl(&parse_tree("2(1,3)").unwrap(), 2, &parse_tree("2(1)").unwrap()).unwrap();
    assert_eq!(sum_from_json(text.trim()).unwrap(), expected);
    let plain = ok(&["compose", "--operad", "pl", "-i", "2", "2(1,3)", "2(1)"]);
    assert_eq!(TreeSum::parse_with_arity(plain.trim(), Some(4)).unwrap(), expected);

    let listed = ok(&["enumerate", "-n", "4", "--json"]);
    let trees: Vec<Tree> = listed.lines().map(|l| tree_from_json(l).unwrap()).collect();
    let plain: Vec<Tree> = ok(&["enumerate", "-n", "4"]).lines().map(|l| parse_tree(l).unwrap()).collect();
    assert_eq!(trees.len(), 64);
    assert_eq!(trees, plain);
}

#[test]
fn minmax_and_degree() {
    assert_eq!(
        ok(&["minmax", "-i", "2", "2(1,3)", "2(1)"]),
        "min 3(2(1),4) degree 3\nmax 3(1,2(4)) degree 5\nbounds 3 5\n"
    );
    assert_eq!(ok(&["degree", "3(2(1,4))"]), "4\n");
}

#[test]
fn batch_input_file() {
    let path = std::env::temp_dir().join(format!("operad-forge-batch-{}.txt", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "3(2(1,4))\n\n3(2(1),4)\n6(5(1,2,3(4,7)),8)").unwrap();
    drop(f);
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["degree", "--input", p]), "3(2(1,4))\t4\n3(2(1),4)\t3\n6(5(1,2,3(4,7)),8)\t17\n");
    let fact = ok(&["factorize", "--input", p]);
    assert_eq!(fact.lines().count(), 3);
    assert!(fact.ends_with("6(5(1,2,3(4,7)),8)\t4(3(1,2,5),6)[_, _, 2(1)[1(2), _], _, _, _]\n"));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run(&["degree", "--input", "/nonexistent/trees.txt"]).code, 2);
}

#[test]
fn counting_commands() {
    let out = ok(&["hilbert", "--order", "9"]);
    assert!(out.ends_with("9:13759430\n"));
    assert!(out.starts_with("2x^2 + x^3 + 14x^4 + 146x^5 + 1994x^6 + 32853x^7 + 630320x^8 + 13759430x^9\n"));
    assert_eq!(ok(&["indecomposables", "-n", "3"]), "2(1,3)\n");
    assert_eq!(ok(&["indecomposables", "-n", "5", "--count"]), "146\n");
    assert_eq!(ok(&["enumerate", "-n", "3"]).lines().count(), 9);
}

#[test]
fn verify_commands() {
    assert_eq!(ok(&["verify", "freeness", "-n", "3"]), "OK 9 trees, 9 constructions\n");
    assert!(ok(&["verify", "axioms", "--operad", "nap", "--max-arity", "3"]).starts_with("OK nap axioms"));
    assert!(ok(&["verify", "minmax", "--max-arity", "3"]).starts_with("OK "));
    assert_eq!(ok(&["verify", "prelie"]), "associator(1(2)) = 1*1(2,3)\nOK pre-Lie relation\n");
    assert_eq!(
        ok(&["verify", "collisions", "--operad", "min", "-n", "3"]),
        "COLLISION 1(2)[1(2), _] | 1(2)[_, 1(2)] -> 1(2(3))\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["degree", "2(1"]).code, 2);
    assert_eq!(run(&["degree", "1(3)"]).code, 2);
    assert_eq!(run(&["compose", "--operad", "pl", "-i", "4", "2(1,3)", "2(1)"]).code, 2);
    assert_eq!(run(&["compose", "--operad", "lie", "-i", "1", "1", "1"]).code, 2);
    assert_eq!(run(&["verify", "collisions", "--operad", "max", "-n", "3"]).code, 2);
    assert_eq!(run(&["factorize", "1"]).code, 2);
    assert_eq!(run(&["hilbert", "--order", "1"]).code, 2);
    assert_eq!(run(&["enumerate", "-n", "0"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["degree"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn binary_is_deterministic_and_honours_thread_cap() {
    let exe = env!("CARGO_BIN_EXE_operad-forge");
    let go = |threads: &str| {
        Command::new(exe)
            .args(["verify", "axioms", "--operad", "min", "--max-arity", "3"])
            .env("OPERAD_FORGE_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = go("1");
    let four = go("4");
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let bad = go("0");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("OPERAD_FORGE_THREADS"));
}
