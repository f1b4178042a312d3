//! Exact game values for small goals, with the principal line.

use ramsey_core::{solve, GameGoal, SolveConfig};

fn main() {
    for (red, blue) in [("P3", "P4"), ("P3", "C4"), ("P3", "P6")] {
        let goal = GameGoal::new(red.parse().unwrap(), blue.parse().unwrap());
        let res = solve(&SolveConfig::new(goal, 10)).expect("solvable");
        println!("{goal}: {} ({} nodes)", res.value, res.nodes_expanded);
        let line: Vec<String> = res.principal.moves.iter().map(|m| format!("{}{}", m.edge, m.color)).collect();
        println!("  {}", line.join(" "));
    }
}
