//! Drive an interactive session in process, the same way the HTTP service does.

use ramsey_core::harness::{CreateSession, HumanRole, MovePayload, SessionStatus, SessionStore};
use ramsey_core::{Color, GameGoal};

fn main() {
    let store = SessionStore::new();
    let req = CreateSession {
        goal: GameGoal::new("P3".parse().unwrap(), "P6".parse().unwrap()),
        human_role: HumanRole::Painter,
        opponent: "p3-path:5".into(),
    };
    let mut snap = store.create(&req).unwrap();
    // a painter that alternates colors
    let mut red = true;
    while snap.status == SessionStatus::Live {
        let color = if red { Color::Red } else { Color::Blue };
        red = !red;
        snap = store.play(&snap.id, &MovePayload { edge: None, color: Some(color) }).unwrap();
    }
    println!("{}", serde_json::to_string_pretty(&snap).unwrap());
    print!("{}", store.transcript(&snap.id).unwrap().to_jsonl());
}
