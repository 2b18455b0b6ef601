use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn mlsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlsub"))
        .args(args)
        .output()
        .expect("spawn mlsub")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mlsub-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn consistent(o: &Output) {
    let c = code(o);
    assert!((0..=2).contains(&c), "exit {c}");
    assert_eq!(
        c == 0,
        stdout(o).lines().next() == Some("YES"),
        "{}",
        stdout(o)
    );
}

#[test]
fn two_edges_matching() {
    let input = scratch("two_edges.mlg", "p mlg 2 2\ne 1 1 2\ne 2 1 2\n");
    let o = mlsub(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--property",
        "matching",
        "--k",
        "2",
        "--ell",
        "2",
        "--algo",
        "matching",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "YES\nX: 1 2\nlayers: 1 2\n");
}

#[test]
fn matching_needs_two_layers() {
    let input = scratch("three.mlg", "p mlg 2 3\ne 1 1 2\ne 2 1 2\ne 3 1 2\n");
    let o = mlsub(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--property",
        "matching",
        "--k",
        "2",
        "--ell",
        "3",
        "--algo",
        "matching",
    ]);
    assert_eq!(code(&o), 2);
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(
        err.contains("matching algorithm requires exactly 2 selected layers"),
        "{err}"
    );
}

#[test]
fn usage_errors_exit_two() {
    let input = scratch("usage.mlg", "p mlg 2 1\ne 1 1 2\n");
    let path = input.to_str().unwrap();
    for args in [
        vec![
            "solve",
            "--input",
            path,
            "--property",
            "matching",
            "--k",
            "2",
        ],
        vec![
            "solve",
            "--input",
            path,
            "--property",
            "nonsense",
            "--k",
            "2",
            "--ell",
            "1",
        ],
        vec![
            "solve",
            "--input",
            path,
            "--property",
            "c-core:x",
            "--k",
            "2",
            "--ell",
            "1",
        ],
        vec![
            "solve",
            "--input",
            path,
            "--property",
            "matching",
            "--k",
            "2",
            "--ell",
            "1",
            "--bogus",
        ],
        vec![
            "solve",
            "--input",
            "/nonexistent.mlg",
            "--property",
            "matching",
            "--k",
            "2",
            "--ell",
            "1",
        ],
        vec![
            "check",
            "--input",
            path,
            "--layer",
            "2",
            "--property",
            "matching",
        ],
    ] {
        let o = mlsub(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(stdout(&o).is_empty());
    }
    let bad = scratch("bad.mlg", "p mlg 2 1\ne 1 1 3\n");
    let o = mlsub(&[
        "solve",
        "--input",
        bad.to_str().unwrap(),
        "--property",
        "matching",
        "--k",
        "2",
        "--ell",
        "1",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn no_answer_exits_one() {
    let input = scratch("sparse.mlg", "p mlg 3 2\ne 1 1 2\n");
    let o = mlsub(&[
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--property",
        "connectivity",
        "--k",
        "3",
        "--ell",
        "1",
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NO\n");
    consistent(&o);
}

#[test]
fn check_layer() {
    let input = scratch("check.mlg", "p mlg 3 2\ne 1 1 2\ne 1 2 3\ne 2 1 2\n");
    let path = input.to_str().unwrap();
    let o = mlsub(&[
        "check",
        "--input",
        path,
        "--layer",
        "1",
        "--property",
        "connectivity",
    ]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "YES\n"));
    let o = mlsub(&[
        "check",
        "--input",
        path,
        "--layer",
        "2",
        "--property",
        "connectivity",
    ]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "NO\n"));
}

#[test]
fn kernelize_writes_hitting_set() {
    let pattern = scratch("p3.txt", "g 3\ne 1 2\ne 2 3\n");
    let input = scratch(
        "kern.mlg",
        "p mlg 4 2\ne 1 1 2\ne 1 2 3\ne 1 3 4\ne 2 1 2\n",
    );
    let out = std::env::temp_dir()
        .join(format!("mlsub-cli-{}", std::process::id()))
        .join("kern.hs");
    let property = format!("forbidden:{}", pattern.display());
    let o = mlsub(&[
        "kernelize",
        "--input",
        input.to_str().unwrap(),
        "--property",
        &property,
        "--k",
        "3",
        "--ell",
        "2",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l.starts_with("p 2chs")), "{text}");
    let o = mlsub(&[
        "kernelize",
        "--input",
        input.to_str().unwrap(),
        "--property",
        "matching",
        "--k",
        "3",
        "--ell",
        "2",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

fn generated(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let o = mlsub(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    stdout(&o)
}

fn header(text: &str, key: &str) -> String {
    text.lines()
        .filter_map(|l| l.strip_prefix("c "))
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no {key} comment"))
        .trim()
        .to_string()
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "--from", "clique", "--target", "matching", "--h", "4", "--seed", "7",
    ];
    let a = generated(&args);
    assert_eq!(a, generated(&args));
    assert!(a.starts_with("c ground-truth: yes source-seed 7\n"), "{a}");
    let out = std::env::temp_dir()
        .join(format!("mlsub-cli-{}", std::process::id()))
        .join("gen.mlg");
    let mut with_file = args.to_vec();
    with_file.extend(["-o", out.to_str().unwrap()]);
    let o = mlsub(&[&["generate"][..], &with_file].concat());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    assert_eq!(fs::read_to_string(&out).unwrap(), a);
    let o = mlsub(&[
        "generate",
        "--from",
        "clique",
        "--target",
        "c-factor:2",
        "--c",
        "3",
        "--h",
        "3",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&o), 2);
    let o = mlsub(&[
        "generate", "--from", "clique", "--target", "tree", "--h", "3", "--seed", "1",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn generated_instances_agree_with_ground_truth() {
    let mut cases = Vec::new();
    for seed in 0..4u64 {
        let plant = if seed % 2 == 0 { "yes" } else { "no" };
        let s = seed.to_string();
        cases.push(generated(&[
            "--from",
            "clique",
            "--target",
            "matching",
            "--h",
            "4",
            "--per-color",
            "2",
            "--edge-prob",
            "0.4",
            "--plant",
            plant,
            "--seed",
            &s,
        ]));
        cases.push(generated(&[
            "--from",
            "clique",
            "--target",
            "c-factor:2",
            "--c",
            "2",
            "--h",
            "3",
            "--per-color",
            "1",
            "--edge-prob",
            "0.5",
            "--plant",
            plant,
            "--seed",
            &s,
        ]));
        cases.push(generated(&[
            "--from",
            "biclique",
            "--target",
            "connectivity",
            "--h",
            "2",
            "--per-color",
            "3",
            "--edge-prob",
            "0.4",
            "--plant",
            plant,
            "--seed",
            &s,
        ]));
        cases.push(generated(&[
            "--from",
            "biclique",
            "--target",
            "hamiltonian",
            "--h",
            "1",
            "--per-color",
            "2",
            "--edge-prob",
            "0.5",
            "--plant",
            plant,
            "--seed",
            &s,
        ]));
    }
    for (i, text) in cases.iter().enumerate() {
        let input = scratch(&format!("case{i}.mlg"), text);
        let property = header(text, "property");
        let k = header(text, "k");
        let ell = header(text, "ell");
        let truth = header(text, "ground-truth:").starts_with("yes");
        let base = [
            "--input",
            input.to_str().unwrap(),
            "--property",
            &property,
            "--k",
            &k,
            "--ell",
            &ell,
        ];
        let auto = mlsub(&[&["solve"][..], &base, &["--algo", "auto"]].concat());
        let brute = mlsub(&[&["oracle"][..], &base].concat());
        consistent(&auto);
        consistent(&brute);
        assert_eq!(code(&auto), code(&brute), "case {i}\n{text}");
        assert_eq!(code(&brute) == 0, truth, "case {i}\n{text}");
    }
}

#[test]
fn auto_matches_brute_on_random_inputs() {
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let properties = [
        "connectivity",
        "matching",
        "complete",
        "edgeless",
        "c-core:2",
        "tree",
        "forest",
        "hamiltonian",
    ];
    for i in 0..40 {
        let n = 3 + (next() % 5) as usize;
        let t = 1 + (next() % 3) as usize;
        let mut text = format!("p mlg {n} {t}\n");
        for layer in 1..=t {
            for u in 1..=n {
                for v in u + 1..=n {
                    if next() % 2 == 0 {
                        text.push_str(&format!("e {layer} {u} {v}\n"));
                    }
                }
            }
        }
        let input = scratch(&format!("rand{i}.mlg"), &text);
        let property = properties[i % properties.len()];
        let k = (2 + next() % (n as u64 - 1)).to_string();
        let ell = (1 + next() % t as u64).to_string();
        let base = [
            "--input",
            input.to_str().unwrap(),
            "--property",
            property,
            "--k",
            &k,
            "--ell",
            &ell,
        ];
        let auto = mlsub(&[&["solve"][..], &base].concat());
        let brute = mlsub(&[&["solve"][..], &base, &["--algo", "brute"]].concat());
        consistent(&auto);
        consistent(&brute);
        assert_eq!(
            code(&auto),
            code(&brute),
            "{property} k={k} ell={ell}\n{text}"
        );
    }
}
