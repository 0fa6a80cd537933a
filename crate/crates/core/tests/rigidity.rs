use bfz_core::bfz_quiver::{glue, BfzQuiver};
use bfz_core::cartan_graph::LabeledGraph;
use bfz_core::coxeter_words::SignConvention;
use bfz_core::cylinder_dimer::DimerModel;
use bfz_core::qp_rigidity::{
    check_rigidity, default_bounds, is_rigid_up_to, superpotential, ArrowTable, Potential,
    RigidityOptions, RigidityReport, Verdict,
};

fn build(r: usize, u: &[u32], v: &[u32]) -> BfzQuiver {
    BfzQuiver::build(&LabeledGraph::path(r), u, v, None, SignConvention::Example).unwrap()
}

fn potential(b: &BfzQuiver) -> Potential {
    let m = DimerModel::new(b.quiver(), &b.graph).unwrap();
    superpotential(&m.faces, &ArrowTable::new(b.quiver())).unwrap()
}

fn assert_certified(r: &RigidityReport, s: &Potential) {
    assert_eq!(r.verdict, Verdict::Rigid);
    assert!(!r.cycles.is_empty());
    for c in &r.cycles {
        let cert = c.certificate.as_ref().expect("members carry certificates");
        assert!(
            cert.verify(&c.cycle, s),
            "certificate for {:?} does not re-expand",
            c.cycle
        );
    }
}

#[test]
fn a2_is_rigid_at_six_and_ten() {
    let b = build(2, &[1, 2, 1], &[]);
    let s = potential(&b);
    let r = is_rigid_up_to(b.quiver(), &s, true, 6, 10).unwrap();
    assert_certified(&r, &s);
}

#[test]
fn sl4_is_rigid_at_eight_and_twelve() {
    let b = build(3, &[3, 2, 1, 2, 3], &[]);
    let s = potential(&b);
    let r = is_rigid_up_to(b.quiver(), &s, true, 8, 12).unwrap();
    assert_certified(&r, &s);
}

#[test]
fn glued_example_is_rigid_at_defaults() {
    let b = build(3, &[1, 2, 1, 3], &[2, 3, 2, 1]);
    let s = potential(&b);
    let r = check_rigidity(b.quiver(), &s, &RigidityOptions::default()).unwrap();
    let (lc, l, _) = default_bounds(b.quiver(), &s);
    assert_eq!(
        (r.max_cycle_len, r.trunc_degree, r.degrees_tried.clone()),
        (lc, l, vec![l])
    );
    assert_certified(&r, &s);

    // Same verdict through the glued construction.
    let (bottom, top) = b.gluing_factors();
    let g = glue(&bottom, &top).unwrap();
    assert_eq!(&g.quiver, b.quiver());
    let r2 = check_rigidity(&g.quiver, &s, &RigidityOptions::default()).unwrap();
    assert_eq!(r, r2);
}

#[test]
fn default_bounds_of_the_examples() {
    let b = build(3, &[3, 2, 1, 2, 3], &[]);
    assert_eq!(default_bounds(b.quiver(), &potential(&b)), (7, 11, 19));
    let b = build(2, &[1, 2, 1], &[]);
    let s = potential(&b);
    assert_eq!(s.max_len(), 3);
    assert_eq!(default_bounds(b.quiver(), &s), (6, 9, 15));
}
