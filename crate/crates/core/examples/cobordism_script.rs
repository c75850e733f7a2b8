//! Build a pair-of-pants script by hand, verify it, then let the search
//! find the same cobordism.

use legcob::moves::{SearchBudget, SearchStatus};
use legcob::{
    parse_front, search_cobordism, verify_script, CobordismScript, FrontDiagram, MoveKind, MoveSite,
};

fn main() -> anyhow::Result<()> {
    let script = CobordismScript::new(
        FrontDiagram::empty(),
        vec![
            MoveSite::new(MoveKind::Birth, 0, 1),
            MoveSite::new(MoveKind::Birth, 2, 1),
            MoveSite::new(MoveKind::SaddleUp, 1, 0),
        ],
    );
    print!("{script}");
    let report = verify_script(&script)?;
    println!(
        "top {}  chi {}  tb {} -> {}  genus {}  ok {}\n",
        report.top, report.chi, report.tb_bottom, report.tb_top, report.genus, report.ok
    );

    let from = parse_front("L1 R1 L1 R1")?;
    let to = parse_front("L1 R1")?;
    let found = search_cobordism(&from, &to, SearchBudget::default());
    match (found.status, found.script) {
        (SearchStatus::Found, Some(s)) => print!("found after {} states\n{s}", found.states),
        (status, _) => println!("{status:?} after {} states", found.states),
    }
    Ok(())
}
