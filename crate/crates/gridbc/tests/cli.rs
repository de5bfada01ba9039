use std::fs;
use std::process::{Command, Output};

use gridbc::format::{cover_from_json, cover_to_json};
use gridbc_core::{optimal_cover, Biclique, Cover, Grid, Vertex};

fn gridbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridbc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bc_command() {
    let o = gridbc(&["bc", "6", "25"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "74 (p even, q−1 = 4·5 + 2·2, k=4 ℓ=2)\n");
    assert_eq!(stdout(&gridbc(&["bc", "1", "1"])), "0\n");
    assert_eq!(stdout(&gridbc(&["bc", "7", "7"])), "24 (floor branch)\n");
    assert_eq!(gridbc(&["bc", "0", "7"]).status.code(), Some(2));
    assert_eq!(gridbc(&["bc", "x"]).status.code(), Some(2));
}

#[test]
fn cover_command() {
    let o = gridbc(&["cover", "8", "17", "--method", "optimal"]);
    assert!(o.status.success());
    assert_eq!(cover_from_json(&stdout(&o)).unwrap().len(), 67);
    let o = gridbc(&["cover", "3", "3", "--method", "checkerboard"]);
    assert_eq!(cover_from_json(&stdout(&o)).unwrap().len(), 4);
    let o = gridbc(&["cover", "6", "8", "--method", "optimal"]);
    assert_eq!(cover_from_json(&stdout(&o)).unwrap().len(), 24);
    assert!(String::from_utf8(o.stderr).unwrap().contains("note"));
    let o = gridbc(&["cover", "1", "1"]);
    assert!(o.status.success());
    assert!(cover_from_json(&stdout(&o)).unwrap().is_empty());
}

#[test]
fn verify_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    assert!(gridbc(&["cover", "6", "6", "--out", p]).status.success());
    let o = gridbc(&["verify", p]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("valid, size 17, waste 8"));

    fs::write(&path, cover_to_json(&optimal_cover(8, 17).unwrap())).unwrap();
    let o = gridbc(&["verify", p, "--analyze", "--normalize", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["normalized"]["cover"]["bicliques"].as_array().unwrap().len(), 67);
    let a = &v["analysis"];
    assert!(a["fences"].as_array().unwrap().iter().all(|f| f["size"].as_u64().unwrap() <= 2));
    assert!(a["unclassified"].as_array().unwrap().is_empty());
    assert_eq!(a["identity"]["Ok"]["identity_holds"], true);

    let text = cover_to_json(&optimal_cover(6, 6).unwrap());
    fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert_eq!(gridbc(&["verify", p]).status.code(), Some(2));
    assert_eq!(gridbc(&["verify", "/nonexistent/c.json"]).status.code(), Some(2));

    let g = Grid::new(2, 3).unwrap();
    let partial = Cover::new(g.dims(), vec![Biclique::cycle(Vertex::new(1, 1))]).unwrap();
    fs::write(&path, cover_to_json(&partial)).unwrap();
    let o = gridbc(&["verify", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn solve_command() {
    assert_eq!(stdout(&gridbc(&["solve", "4", "4"])), "7\n");
    assert_eq!(stdout(&gridbc(&["solve", "2", "2"])), "1\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = gridbc(&["solve", "5", "5", "--budget", "600", "--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "12\n");
    assert_eq!(cover_from_json(&fs::read_to_string(&path).unwrap()).unwrap().len(), 12);
    assert_eq!(gridbc(&["solve", "3", "3", "--budget", "-1"]).status.code(), Some(2));
}

#[test]
fn table_command() {
    let o = stdout(&gridbc(&["table", "4", "8"]));
    assert_eq!(o.lines().nth(1).unwrap().replace('*', ""), "1,2,3,4,5,6,7");
    assert_eq!(stdout(&gridbc(&["table", "1", "1"])), "0\n");
    let o = stdout(&gridbc(&["table", "6", "25"]));
    let row6: Vec<&str> = o.lines().nth(5).unwrap().split(',').collect();
    assert_eq!(row6[25 - 6], "74*");
}

#[test]
fn render_command() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("c.json");
    let svg = dir.path().join("c.svg");
    assert!(gridbc(&["cover", "6", "8", "--method", "checkerboard", "--out", cover.to_str().unwrap()]).status.success());
    assert!(gridbc(&["render", cover.to_str().unwrap(), "--svg", svg.to_str().unwrap()]).status.success());
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches(r#"class="star""#).count(), 24);
    assert_eq!(text.matches(r#"class="cycle""#).count(), 0);
    fs::write(&cover, "not json").unwrap();
    assert_eq!(gridbc(&["render", cover.to_str().unwrap()]).status.code(), Some(2));
}
