use liecontract::harness::{run_scenario_file, scenario_dir};

fn main() {
    let mut paths: Vec<_> = std::fs::read_dir(scenario_dir())
        .expect("bundled scenarios")
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for p in paths {
        let r = run_scenario_file(&p, None);
        println!("{:<28} exit {}  ({} checks)", r.scenario, r.exit_code, r.results.len());
    }
}
