use std::process::{Command, Output};

use stringcone::oracle::weyl_dim;
use stringcone::polytopes::string_polytope_points;
use stringcone::{Error, Family, LieType, Weight};
use stringcone_cli::{
    read_records, BranchRecord, ConeRecord, Failure, PointsRecord, EXIT_MISMATCH, EXIT_USAGE,
};

fn stringcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stringcone(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn body(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn branch_table_d3_omega1() {
    let text = stdout(&["branch", "--type", "D", "--rank", "3", "--lambda", "1,0,0"]);
    assert_eq!(body(&text), ["ω_1: 1", "ω_2: 1"]);
}

#[test]
fn branch_table_b2_omega1() {
    let text = stdout(&["branch", "--type", "B", "--rank", "2", "--lambda", "1,0"]);
    assert_eq!(body(&text), ["ω_1: 2", "0: 1"]);
}

#[test]
fn branch_of_zero_is_one_row() {
    let text = stdout(&["branch", "--type", "C", "--rank", "3", "--lambda", "0,0,0"]);
    assert_eq!(body(&text), ["0: 1"]);
}

#[test]
fn branch_records_round_trip() {
    let text = stdout(&[
        "branch", "--type", "D", "--rank", "4", "--lambda", "0,1,0,0", "--fibers", "--format",
        "records",
    ]);
    let rec: BranchRecord = read_records(&text).unwrap();
    assert_eq!(rec.lie_type, "D4");
    assert_eq!(rec.levi, "A3");
    let d4 = LieType::new(Family::D, 4).unwrap();
    let a3 = d4.levi().unwrap();
    let total: u128 = rec
        .multiplicities
        .iter()
        .map(|m| {
            u128::from(m.multiplicity) * weyl_dim(a3, &Weight::new(a3, &m.mu).unwrap()).unwrap()
        })
        .sum();
    assert_eq!(total, 28);
    let fibers = rec.fibers.unwrap();
    assert_eq!(fibers.iter().map(|f| f.size).sum::<usize>(), 28);
    assert_eq!(
        fibers.len() as u64,
        rec.multiplicities
            .iter()
            .map(|m| m.multiplicity)
            .sum::<u64>()
    );
}

#[test]
fn polytope_count() {
    let text = stdout(&[
        "polytope", "--type", "B", "--rank", "2", "--lambda", "0,1", "--count",
    ]);
    assert_eq!(text.trim(), "4");
    let text = stdout(&[
        "polytope", "--type", "D", "--rank", "4", "--lambda", "0,1,0,0", "--count",
    ]);
    assert_eq!(text.trim(), "28");
}

#[test]
fn polytope_records_match_library() {
    let text = stdout(&[
        "polytope", "--type", "C", "--rank", "3", "--lambda", "1,0,1", "--format", "records",
    ]);
    let rec: PointsRecord = read_records(&text).unwrap();
    let c3 = LieType::new(Family::C, 3).unwrap();
    let l = Weight::new(c3, &[1, 0, 1]).unwrap();
    assert_eq!(rec.points, string_polytope_points(c3, &l).unwrap());
    assert_eq!(rec.count as u128, weyl_dim(c3, &l).unwrap());
    assert_eq!(rec.labels.len(), 9);
}

#[test]
fn polytope_lines_and_lusztig_agree_in_size() {
    let args = [
        "polytope", "--type", "D", "--rank", "3", "--lambda", "1,0,1", "--format", "lines",
    ];
    let string = stdout(&args);
    let lusztig = stdout(&[&args[..], &["--lusztig"]].concat());
    let d3 = LieType::new(Family::D, 3).unwrap();
    let dim = weyl_dim(d3, &Weight::new(d3, &[1, 0, 1]).unwrap()).unwrap() as usize;
    assert_eq!(string.lines().count(), dim);
    assert_eq!(lusztig.lines().count(), dim);
    assert!(lusztig.lines().all(|l| l.split(' ').count() == 6));
}

#[test]
fn cone_c2() {
    let text = stdout(&["cone", "--type", "C", "--rank", "2"]);
    let forms = body(&text);
    assert_eq!(forms.len(), 6);
    let nonneg = forms.iter().filter(|f| !f.contains(" - ")).count();
    assert_eq!(nonneg, 4);
    assert!(forms.iter().any(|f| f.contains("2t+")));

    let rec: ConeRecord = read_records(&stdout(&[
        "cone", "--type", "C", "--rank", "2", "--format", "records",
    ]))
    .unwrap();
    assert_eq!(rec.labels.len(), 4);
    assert_eq!(rec.forms.len(), 6);
    assert!(rec.forms.iter().all(|f| f.constant == 0));
}

#[test]
fn cone_bz_has_same_size_for_rank_two() {
    for fam in ["B", "C"] {
        let explicit = stdout(&["cone", "--type", fam, "--rank", "2"]);
        let bz = stdout(&["cone", "--type", fam, "--rank", "2", "--bz"]);
        assert_eq!(body(&explicit).len(), body(&bz).len(), "{fam}2");
    }
}

#[test]
fn poset_dot_d3() {
    let text = stdout(&["poset", "--type", "D", "--rank", "3"]);
    assert!(text.starts_with("digraph"));
    let edges = text.lines().filter(|l| l.contains("->")).count();
    let nodes = text
        .lines()
        .filter(|l| l.ends_with("\";") && !l.contains("->"))
        .count();
    assert_eq!((nodes, edges), (6, 3));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "polytope", "--type", "B", "--rank", "3", "--lambda", "1,1,0",
    ];
    assert_eq!(stringcone(&args).stdout, stringcone(&args).stdout);
    let args = ["poset", "--type", "D", "--rank", "5", "--block", "plus"];
    assert_eq!(stringcone(&args).stdout, stringcone(&args).stdout);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cone.txt");
    let path_s = path.to_str().unwrap();
    let out = stringcone(&["cone", "--type", "D", "--rank", "4", "--output", path_s]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["cone", "--type", "D", "--rank", "4"]));
}

#[test]
fn verify_subset_passes() {
    let out = stringcone(&[
        "verify",
        "--criteria",
        "3,7",
        "--max-rank",
        "3",
        "--max-coeff",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["polytope", "--type", "D", "--rank", "2", "--lambda", "1,0"],
        &[
            "polytope", "--type", "D", "--rank", "3", "--lambda", "-1,0,0",
        ],
        &["polytope", "--type", "D", "--rank", "3", "--lambda", "1,0"],
        &["polytope", "--type", "B", "--rank", "2", "--lambda", "1,x"],
        &["branch", "--type", "A", "--rank", "3", "--lambda", "1,0,0"],
        &["poset", "--type", "C", "--rank", "3", "--format", "table"],
        &[
            "polytope",
            "--type",
            "C",
            "--rank",
            "4",
            "--lambda",
            "2,2,2,2",
            "--dim-cap",
            "100",
        ],
        &["verify", "--criteria", "9"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = stringcone(args);
        assert_eq!(out.status.code(), Some(i32::from(EXIT_USAGE)), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn inconsistencies_map_to_exit_1() {
    let f = Failure::from(Error::Internal("mismatch".into()));
    assert_eq!(f.code, EXIT_MISMATCH);
    let f = Failure::from(Error::NonDominant);
    assert_eq!(f.code, EXIT_USAGE);
}
