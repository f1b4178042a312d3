//! Run a scripted Builder against the blocking painter and print the game.

use ramsey_core::{blocking_painter, run_game, BuilderSpec, Family};

fn main() {
    let spec: BuilderSpec = std::env::args().nth(1).as_deref().unwrap_or("p3-path:8").parse().expect("strategy");
    let painter = blocking_painter(Family::path_forest(2));
    let game = run_game(&spec, &painter, 200).expect("game finishes");
    for m in &game.transcript.moves {
        println!("{:>3}  {}  {}", m.round, m.edge, m.color);
    }
    println!("{} wins {} after {} rounds", game.winner, game.goal, game.rounds());
}
