use deltalink::data::{
    format_evidence, load_evidence, parse_catalog, parse_evidence, read_evidence, write_evidence,
    BUNDLED_CATALOG, BUNDLED_CITED, BUNDLED_EVIDENCE,
};
use deltalink_core::analysis::{parse_edge, verify_edge, EvidenceEdge, ReplayError, Witness};
use deltalink_core::{Catalog, ConwayEngine, MoveClass};

fn catalog(engine: &mut ConwayEngine) -> Catalog {
    parse_catalog(BUNDLED_CATALOG, "(bundled)", engine).unwrap()
}

#[test]
fn every_shipped_witness_replays() {
    let mut engine = ConwayEngine::new();
    let cat = catalog(&mut engine);
    let edges = parse_evidence(BUNDLED_EVIDENCE, "(bundled)").unwrap();
    assert!(edges.len() > 100);
    for e in &edges {
        assert!(!e.is_cited());
        verify_edge(&cat, e, &mut engine).unwrap_or_else(|err| panic!("{e}: {err}"));
    }
}

#[test]
fn cited_edges_are_not_checkable() {
    let mut engine = ConwayEngine::new();
    let cat = catalog(&mut engine);
    let cited = parse_evidence(BUNDLED_CITED, "(bundled cited)").unwrap();
    assert_eq!(cited.len(), 1);
    assert_eq!(
        (cited[0].from.as_str(), cited[0].to.as_str()),
        ("L9a3", "L9a1")
    );
    assert_eq!(
        verify_edge(&cat, &cited[0], &mut engine),
        Err(ReplayError::NotCheckable)
    );
}

fn first_edge(prefix: &str) -> EvidenceEdge {
    parse_evidence(BUNDLED_EVIDENCE, "(bundled)")
        .unwrap()
        .into_iter()
        .find(|e| e.to_string().starts_with(prefix))
        .unwrap()
}

#[test]
fn tampered_witnesses_are_rejected() {
    let mut engine = ConwayEngine::new();
    let cat = catalog(&mut engine);
    let good = first_edge("edge: L8a2|Trivial ; kind=self");
    verify_edge(&cat, &good, &mut engine).unwrap();

    let mut wrong_end = good.clone();
    wrong_end.to = "L8a4".into();
    assert!(matches!(
        verify_edge(&cat, &wrong_end, &mut engine),
        Err(ReplayError::WrongEnd { .. })
    ));

    let mut wrong_start = good.clone();
    wrong_start.from = "L5a1".into();
    assert!(matches!(
        verify_edge(&cat, &wrong_start, &mut engine),
        Err(ReplayError::WrongStart(_))
    ));

    let mut wrong_length = good.clone();
    wrong_length.length = 2;
    assert!(matches!(
        verify_edge(&cat, &wrong_length, &mut engine),
        Err(ReplayError::LengthMismatch { .. })
    ));

    let mut wrong_class = good.clone();
    wrong_class.class = MoveClass::Mixed;
    assert!(matches!(
        verify_edge(&cat, &wrong_class, &mut engine),
        Err(ReplayError::WrongClass { .. })
    ));

    let mut bad_step = good.clone();
    if let Witness::Replay { steps, .. } = &mut bad_step.witness {
        steps[0] = 10_000;
    }
    assert!(matches!(
        verify_edge(&cat, &bad_step, &mut engine),
        Err(ReplayError::BadStep { .. })
    ));
}

#[test]
fn mixed_witness_to_split_union_needs_a_split_diagram() {
    let mut engine = ConwayEngine::new();
    let cat = catalog(&mut engine);
    let good = first_edge("edge: L8a4|0_1+m3_1 ; kind=mixed");
    verify_edge(&cat, &good, &mut engine).unwrap();
    let mut claimed_other = good.clone();
    claimed_other.to = "0_1+3_1".into();
    assert!(verify_edge(&cat, &claimed_other, &mut engine).is_err());
}

#[test]
fn edges_round_trip_through_files() {
    let edges = parse_evidence(BUNDLED_EVIDENCE, "(bundled)").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("evidence.txt");
    write_evidence(&path, &edges, &["header line".to_string()]).unwrap();
    assert_eq!(read_evidence(&path).unwrap(), edges);
    let text = format_evidence(&edges, &[]);
    for (line, e) in text.lines().zip(&edges) {
        assert_eq!(parse_edge(line).unwrap(), *e);
    }
}

#[test]
fn malformed_lines_report_their_position() {
    let err = parse_evidence(
        "# ok\nedge: A|B ; kind=self ; length=x ; witness=cited\n",
        "probe",
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "evidence probe, line 2: bad length `x`");
    assert!(parse_edge("edge: A|B ; kind=sideways ; length=1 ; witness=cited").is_err());
    assert!(parse_edge("A|B ; kind=self ; length=1 ; witness=cited").is_err());
    assert!(parse_edge("edge: A|B ; kind=self ; length=1").is_err());
}

#[test]
fn explicit_evidence_replaces_bundled_search_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    std::fs::write(&path, "# nothing\n").unwrap();
    let graph = load_evidence(&[path]).unwrap();
    assert_eq!(graph.edges().len(), 1);
    assert!(load_evidence(&[]).unwrap().edges().len() > 100);
}
