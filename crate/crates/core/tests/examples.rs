//! Worked examples through the public API, one module at a time.

use std::sync::Arc;

use classtab::formal::rat;
use classtab::lie::{weyl_dim, HighestWeight, RootFamily, RootSystem};
use classtab::relations::{orthogonal_relation, pin_relation, symplectic_relation, PinSigns};
use classtab::straighten::{gl_straighten, pin_straighten, symplectic_straighten, DEFAULT_STEP_CAP};
use classtab::tensor::{act, check_closure, GroupElement};
use classtab::{
    enumerate_basis, is_basis_member, weight_polynomial, Alphabet, AlphabetKind, BasisFamily, BoxPos, Filling,
    FormalSum, Group, LaurentPoly, Method, OracleConfig, RelationSpan, Shape, Straightener, Symbol,
};

fn plain(parts: &[usize], rank: usize) -> Arc<Shape> {
    Arc::new(Shape::plain(parts, rank).unwrap())
}

fn spin(parts: &[usize], rank: usize) -> Arc<Shape> {
    Arc::new(Shape::spin(parts, rank).unwrap())
}

fn fill(sh: &Arc<Shape>, rows: &[Vec<i32>]) -> Filling {
    Filling::from_signed(sh.clone(), rows, None).unwrap()
}

fn spin_fill(sh: &Arc<Shape>, rows: &[Vec<i32>], half: &[i32]) -> Filling {
    Filling::from_signed(sh.clone(), rows, Some(half)).unwrap()
}

fn sum(terms: &[(&Filling, i64)]) -> FormalSum {
    let mut s = FormalSum::new();
    for (f, c) in terms {
        s.add_raw(f, &rat(*c));
    }
    s
}

fn one(f: &Filling) -> FormalSum {
    FormalSum::from_filling(f)
}

#[test]
fn alphabet_orders() {
    let sp = Alphabet::new(AlphabetKind::Symplectic, 2);
    assert!(sp.compare(Symbol::barred(1), Symbol::plain(2)).unwrap().is_lt());
    let odd = Alphabet::new(AlphabetKind::OddOrthogonal, 1);
    assert!(odd.compare(Symbol::barred(1), Symbol::ZERO).unwrap().is_lt());
    assert!(odd.compare(Symbol::ZERO, Symbol::ZERO).unwrap().is_eq());
}

#[test]
fn weights_are_doubled() {
    let sh = plain(&[2, 1], 2);
    assert_eq!(fill(&sh, &[vec![1, -1], vec![2]]).weight().doubled(), &[0, 2]);
    let row = plain(&[2], 1);
    assert_eq!(fill(&row, &[vec![1, 0]]).weight().doubled(), &[2]);
    let s = spin(&[1], 1);
    assert_eq!(spin_fill(&s, &[vec![1]], &[1]).weight().doubled(), &[3]);
}

#[test]
fn basis_predicates() {
    let sh = plain(&[1, 1], 1);
    assert!(!is_basis_member(&fill(&sh, &[vec![1], vec![-1]]), BasisFamily::Symplectic).unwrap());
    let row = plain(&[2], 1);
    assert!(!is_basis_member(&fill(&row, &[vec![0, 0]]), BasisFamily::SundaramOdd).unwrap());
    assert!(is_basis_member(&fill(&row, &[vec![1, 1]]), BasisFamily::OrthogonalEven).unwrap());
    assert!(is_basis_member(&fill(&row, &[vec![-1, -1]]), BasisFamily::OrthogonalEven).unwrap());
    assert!(!is_basis_member(&fill(&row, &[vec![1, -1]]), BasisFamily::OrthogonalEven).unwrap());
    let quasi = plain(&[2, 1], 1);
    assert!(!is_basis_member(&fill(&quasi, &[vec![1, 1], vec![-1]]), BasisFamily::OrthogonalOdd).unwrap());
    let s = spin(&[1], 1);
    assert!(is_basis_member(&spin_fill(&s, &[vec![1]], &[1]), BasisFamily::PinEven).unwrap());
    assert!(!is_basis_member(&spin_fill(&s, &[vec![-1]], &[1]), BasisFamily::PinEven).unwrap());
}

#[test]
fn enumerated_bases() {
    let sh = plain(&[1, 1], 2);
    let got = enumerate_basis(&sh, BasisFamily::Symplectic).unwrap();
    let want: Vec<Filling> =
        [[1, 2], [1, -2], [-1, 2], [-1, -2], [2, -2]].iter().map(|c| fill(&sh, &[vec![c[0]], vec![c[1]]])).collect();
    assert_eq!(got.len(), 5);
    for w in &want {
        assert!(got.contains(w), "missing {w}");
    }
    assert_eq!(enumerate_basis(&plain(&[1], 1), BasisFamily::OrthogonalOdd).unwrap().len(), 3);
    for family in BasisFamily::ALL {
        let sh = Arc::new(Shape::new(Default::default(), family.needs_spin(), 1).unwrap());
        let expected = if family.needs_spin() { 2 } else { 1 };
        assert_eq!(enumerate_basis(&sh, family).unwrap().len(), expected, "{family}");
    }
}

#[test]
fn weight_polynomials() {
    let p = weight_polynomial(&plain(&[1], 1), BasisFamily::Symplectic).unwrap();
    let mut want = LaurentPoly::zero(1);
    want.add_term(vec![2], 1);
    want.add_term(vec![-2], 1);
    assert_eq!(p, want);
    let p = weight_polynomial(&plain(&[1], 1), BasisFamily::OrthogonalOdd).unwrap();
    want.add_term(vec![0], 1);
    assert_eq!(p, want);
    let p = weight_polynomial(&spin(&[], 2), BasisFamily::PinOdd).unwrap();
    assert_eq!(p.terms().len(), 4);
    assert!(p.terms().keys().all(|e| e.iter().all(|x| x.abs() == 1)));
}

#[test]
fn group_relations() {
    let b = (BoxPos::new(0, 0), BoxPos::new(0, 1));
    let row = plain(&[2], 1);
    let rest = fill(&row, &[vec![1, 1]]);
    let v = symplectic_relation(&rest, b.0, b.1, 1).unwrap().vector;
    assert_eq!(v, sum(&[(&fill(&row, &[vec![1, -1]]), 1), (&fill(&row, &[vec![-1, 1]]), -1)]));
    let v = orthogonal_relation(&rest, b.0, b.1, 1, true).unwrap().vector;
    assert_eq!(
        v,
        sum(&[(&fill(&row, &[vec![0, 0]]), 1), (&fill(&row, &[vec![1, -1]]), 1), (&fill(&row, &[vec![-1, 1]]), 1)])
    );

    let col = plain(&[1, 1], 2);
    let rest = fill(&col, &[vec![1], vec![2]]);
    let v = symplectic_relation(&rest, BoxPos::new(0, 0), BoxPos::new(1, 0), 2).unwrap().vector;
    assert_eq!(v, sum(&[(&fill(&col, &[vec![1], vec![-1]]), 2), (&fill(&col, &[vec![2], vec![-2]]), 2)]));

    let s = spin(&[1], 1);
    let rest = spin_fill(&s, &[vec![1]], &[1]);
    let v = pin_relation(&rest, BoxPos::new(0, 0), true).unwrap().vector;
    assert_eq!(v, sum(&[(&spin_fill(&s, &[vec![0]], &[1]), 1), (&spin_fill(&s, &[vec![1]], &[-1]), 1)]));
}

#[test]
fn straightening() {
    let row = plain(&[2], 2);
    let r = gl_straighten(&one(&fill(&row, &[vec![2, 1]])), DEFAULT_STEP_CAP).unwrap();
    assert_eq!(r.output, one(&fill(&row, &[vec![1, 2]])));

    let col = plain(&[1, 1], 2);
    let r = symplectic_straighten(&one(&fill(&col, &[vec![1], vec![-1]])), 2, DEFAULT_STEP_CAP).unwrap();
    assert_eq!(r.output, sum(&[(&fill(&col, &[vec![2], vec![-2]]), -1)]));
    let col1 = plain(&[1, 1], 1);
    let r = symplectic_straighten(&one(&fill(&col1, &[vec![1], vec![-1]])), 1, DEFAULT_STEP_CAP).unwrap();
    assert!(r.output.is_zero());

    let s = spin(&[1], 1);
    let r = pin_straighten(&one(&spin_fill(&s, &[vec![-1]], &[1])), false, DEFAULT_STEP_CAP).unwrap();
    assert!(r.output.is_zero());
    let r = pin_straighten(&one(&spin_fill(&s, &[vec![1]], &[-1])), true, DEFAULT_STEP_CAP).unwrap();
    assert_eq!(r.output, sum(&[(&spin_fill(&s, &[vec![0]], &[1]), -1)]));
}

#[test]
fn linear_solve_agrees_with_rewriting() {
    let col = plain(&[1, 1], 2);
    let x = one(&fill(&col, &[vec![1], vec![-1]]));
    let st = Straightener::new(BasisFamily::Symplectic, 2);
    let a = st.straighten_with(&x, Method::Combinatorial).unwrap().output;
    let b = st.straighten_with(&x, Method::LinearSolve).unwrap().output;
    assert_eq!(a, b);

    let row = plain(&[2], 1);
    let st = Straightener::new(BasisFamily::OrthogonalOdd, 1);
    let zz = one(&fill(&row, &[vec![0, 0]]));
    assert_eq!(st.straighten(&zz).unwrap().output, zz);
}

#[test]
fn quotient_dimensions() {
    let cfg = OracleConfig::default();
    let dim = |sh: &Arc<Shape>, g| RelationSpan::build(sh, g, &cfg).unwrap().quotient_dim();
    assert_eq!(dim(&plain(&[1], 1), Group::OOdd), 3);
    assert_eq!(dim(&plain(&[2], 1), Group::OEven), 2);
    assert_eq!(dim(&spin(&[1], 1), Group::PinEven), 2);
    let sp = RelationSpan::build(&plain(&[1, 1], 1), Group::Sp, &cfg).unwrap();
    assert!(!sp.check_independent(&[fill(sp.shape(), &[vec![1], vec![-1]])]).unwrap());
}

#[test]
fn closure_examples() {
    let cfg = OracleConfig::default();
    assert!(check_closure(&plain(&[2, 1], 1), Group::Sp, &cfg).unwrap().passed());
    assert!(check_closure(&spin(&[2], 1), Group::PinEven, &cfg).unwrap().passed());
    let gl = check_closure(&plain(&[2], 2), Group::Gl, &cfg).unwrap();
    assert!(gl.passed() && gl.substituted_checked == 0);
}

#[test]
fn literal_pin_signs_break_independence() {
    let mut cfg = OracleConfig::default();
    cfg.relations.pin_signs = PinSigns::Literal;
    let sh = spin(&[2, 1], 2);
    let span = RelationSpan::build(&sh, Group::PinOdd, &cfg).unwrap();
    assert_eq!(span.quotient_dim(), 60);
    cfg.relations.pin_signs = PinSigns::Clifford;
    let span = RelationSpan::build(&sh, Group::PinOdd, &cfg).unwrap();
    assert_eq!(span.quotient_dim(), 64);
}

#[test]
fn transvection_action() {
    let a = Alphabet::new(AlphabetKind::Symplectic, 1);
    let mut g = GroupElement::identity("transvection", a.size());
    let (p, q) = (a.position(Symbol::plain(1)).unwrap(), a.position(Symbol::barred(1)).unwrap());
    g.matrix[p][q] = rat(1);
    let sh = plain(&[1], 1);
    let y = act(&g, &one(&fill(&sh, &[vec![-1]])), Group::Sp, 1).unwrap();
    assert_eq!(y, sum(&[(&fill(&sh, &[vec![-1]]), 1), (&fill(&sh, &[vec![1]]), 1)]));
}

#[test]
fn weyl_dimensions() {
    for m in 0..5 {
        let hw = HighestWeight::from_partition(&[m], 1).unwrap();
        assert_eq!(weyl_dim(&RootSystem::new(RootFamily::C, 1), &hw).unwrap(), m as u64 + 1);
    }
    let hw = HighestWeight::from_partition(&[1, 1], 2).unwrap();
    assert_eq!(weyl_dim(&RootSystem::new(RootFamily::C, 2), &hw).unwrap(), 5);
}
