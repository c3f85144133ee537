use super::*;
use crate::frac::Frac;

pub(crate) fn caps() -> Caps {
    Caps::default()
}

/// Symmetric group on 3 letters from its two standard generators, plus the
/// index of the transposition generator (an order-2 element).
pub(crate) fn sym3() -> (FiniteGroup, usize) {
    let swap = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
    let cycle = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
    let (g, elems) = FiniteGroup::from_permutation_generators(&[swap.clone(), cycle], 3, &caps())
        .unwrap();
    let s = elems.iter().position(|p| *p == swap).unwrap();
    (g, s)
}

#[test]
fn closure_of_single_transposition_has_order_two() {
    let t = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
    let (g, _) = FiniteGroup::from_permutation_generators(&[t], 2, &caps()).unwrap();
    assert_eq!(g.order(), 2);
    g.check_axioms().unwrap();
}

#[test]
fn empty_generator_list_gives_trivial_group() {
    let (g, elems) = FiniteGroup::from_permutation_generators(&[], 4, &caps()).unwrap();
    assert_eq!(g.order(), 1);
    assert!(elems[0].is_identity());
}

#[test]
fn sym3_has_order_six() {
    // brute-force oracle: the closure must equal all 6 permutations of 3 points
    let (g, _) = sym3();
    assert_eq!(g.order(), 6);
    g.check_axioms().unwrap();
}

#[test]
fn closure_respects_size_cap() {
    let mut caps = caps();
    caps.max_group_order = 5;
    let swap = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
    let cycle = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
    let err = FiniteGroup::from_permutation_generators(&[swap, cycle], 3, &caps).unwrap_err();
    assert!(matches!(err, GroupError::GroupTooLarge(_, 5)));
}

#[test]
fn from_table_rejects_non_identity_zero() {
    // swap the roles of 0 and 1 in the order-2 table
    let err = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]);
    assert!(err.is_err());
}

#[test]
fn normal_core_of_whole_group_is_whole_group() {
    let (g, _) = sym3();
    let h = Subgroup::full(&g);
    let core = g.normal_core(&h).unwrap();
    assert_eq!(core.len(), 6);
}

#[test]
fn normal_core_of_normal_subgroup_is_itself() {
    let (g, _) = sym3();
    // the 3-element rotation subgroup is normal
    let a3 = g
        .all_subgroups()
        .into_iter()
        .find(|s| s.len() == 3)
        .unwrap();
    let core = g.normal_core(&a3).unwrap();
    assert_eq!(core, a3);
}

#[test]
fn normal_core_of_two_element_subgroup_of_sym3_is_trivial() {
    // brute-force oracle: intersect the three conjugate 2-element subgroups
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    assert_eq!(h.len(), 2);
    let mut manual: Vec<usize> = (0..g.order()).collect();
    for c in 0..g.order() {
        let conj: Vec<usize> = h
            .elements()
            .map(|x| g.mul(g.mul(c, x), g.inv(c)))
            .collect();
        manual.retain(|x| conj.contains(x));
    }
    assert_eq!(manual, vec![0]);
    let core = g.normal_core(&h).unwrap();
    assert_eq!(core.elements().collect::<Vec<_>>(), manual);
}

#[test]
fn normal_core_is_largest_normal_subgroup_inside_h() {
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    let core = g.normal_core(&h).unwrap();
    for sub in g.all_subgroups() {
        if sub.is_subset_of(&h) && sub.is_normal_in(&g) {
            assert!(sub.is_subset_of(&core));
        }
    }
}

#[test]
fn transversal_of_full_subgroup_is_identity_only() {
    let (g, _) = sym3();
    let h = Subgroup::full(&g);
    assert_eq!(g.right_coset_transversal(&h).unwrap(), vec![0]);
}

#[test]
fn transversal_of_trivial_subgroup_is_everything() {
    let (g, _) = sym3();
    let h = Subgroup::trivial(&g);
    assert_eq!(
        g.right_coset_transversal(&h).unwrap(),
        (0..6).collect::<Vec<_>>()
    );
}

#[test]
fn transversal_partitions_the_group() {
    // brute-force coset partition oracle for an index-3 subgroup
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    let reps = g.right_coset_transversal(&h).unwrap();
    assert_eq!(reps.len(), 3);
    assert_eq!(reps[0], 0);
    let mut covered: Vec<usize> = reps
        .iter()
        .flat_map(|&r| h.elements().map(move |x| (x, r)))
        .map(|(x, r)| g.mul(x, r))
        .collect();
    covered.sort_unstable();
    assert_eq!(covered, (0..6).collect::<Vec<_>>());
    // representatives are coset-minimal
    for &r in &reps {
        for x in h.elements() {
            assert!(g.mul(x, r) >= r);
        }
    }
}

#[test]
fn quotient_by_whole_group_is_trivial() {
    let (g, _) = sym3();
    let q = g.quotient(&Subgroup::full(&g)).unwrap();
    assert_eq!(q.target.order(), 1);
}

#[test]
fn quotient_by_trivial_subgroup_is_isomorphic_copy() {
    let (g, _) = sym3();
    let q = g.quotient(&Subgroup::trivial(&g)).unwrap();
    assert_eq!(q.target.order(), 6);
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(q.apply(g.mul(a, b)), q.target.mul(q.apply(a), q.apply(b)));
        }
    }
}

#[test]
fn quotient_by_index_two_normal_subgroup() {
    // brute-force coset multiplication oracle
    let (g, _) = sym3();
    let a3 = g
        .all_subgroups()
        .into_iter()
        .find(|s| s.len() == 3)
        .unwrap();
    let q = g.quotient(&a3).unwrap();
    assert_eq!(q.target.order(), 2);
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(q.apply(g.mul(a, b)), q.target.mul(q.apply(a), q.apply(b)));
        }
    }
    // section is a right inverse on coset representatives
    for c in 0..2 {
        assert_eq!(q.apply(q.section(c)), c);
    }
}

#[test]
fn quotient_rejects_non_normal_subgroup() {
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    assert!(matches!(
        g.quotient(&h).unwrap_err(),
        GroupError::NotNormal(_, _)
    ));
}

#[test]
fn regular_rep_is_multiplicative_and_fixed_point_free() {
    let (g, _) = sym3();
    let rep = g.left_regular_rep();
    assert!(rep[0].is_identity());
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(rep[a].compose(&rep[b]), rep[g.mul(a, b)]);
        }
    }
    for r in rep.iter().skip(1) {
        assert_eq!(r.fixed_points(), 0);
    }
}

#[test]
fn regular_image_of_involution_is_three_transpositions() {
    let (g, s) = sym3();
    let rep = g.left_regular_rep();
    let p = &rep[s];
    assert_eq!(p.fixed_points(), 0);
    assert_eq!(p.compose(p), Permutation::identity(6));
}

#[test]
fn hamming_basics() {
    let id = Permutation::identity(5);
    assert_eq!(hamming(&id, &id).unwrap(), Frac::new(0, 1));
    let five_cycle = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
    assert_eq!(hamming(&five_cycle, &id).unwrap(), Frac::new(1, 1));
    let t = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
    assert_eq!(hamming(&t, &id).unwrap(), Frac::new(2, 5));
    let other = Permutation::identity(4);
    assert!(hamming(&id, &other).is_err());
}

#[test]
fn direct_product_orders_and_projections() {
    let (g, _) = sym3();
    let c4 = FiniteGroup::cyclic(4);
    let p = g.direct_product(&c4, &caps()).unwrap();
    assert_eq!(p.group.order(), 24);
    for a in 0..6 {
        for b in 0..4 {
            let x = p.pair(a, b);
            assert_eq!(p.left_of(x), a);
            assert_eq!(p.right_of(x), b);
        }
    }
    // product with the trivial group is an isomorphic copy
    let q = g.direct_product(&FiniteGroup::trivial(), &caps()).unwrap();
    assert_eq!(q.group.table(), g.table());
}

#[test]
fn klein_four_group_has_three_involutions() {
    let c2 = FiniteGroup::cyclic(2);
    let k4 = c2.direct_product(&c2, &caps()).unwrap().group;
    assert_eq!(k4.order(), 4);
    let involutions = (1..4).filter(|&x| k4.mul(x, x) == 0).count();
    assert_eq!(involutions, 3);
}

#[test]
fn normal_core_chain_validates() {
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    let chain = CoSoficChain::normal_core_chain(&g, &h, 2).unwrap();
    chain.validate().unwrap();
}

#[test]
fn chain_membership_predicate_matches_target() {
    let (g, s) = sym3();
    let h = Subgroup::generated(&g, &[s]).unwrap();
    let chain = CoSoficChain::normal_core_chain(&g, &h, 3).unwrap();
    let ctx = chain.context().unwrap();
    for x in 0..g.order() {
        assert_eq!(ctx.membership(x).unwrap(), h.contains(x));
        if !h.contains(x) {
            // some finite stage must reject the coset
            assert!((0..ctx.stage_count()).any(|k| !ctx.coset_in_stage(x, k).unwrap()));
        }
    }
    let (coset, witness) = ctx.stage_pair(0, 0).unwrap();
    assert_eq!((coset, witness), (0, 0));
}

fn strictly_decreasing_chain(n: usize) -> CoSoficChain {
    // cyclic group of even order n: stages (⟨2⟩, ⟨2⟩) then ({0}, {0})
    let g = FiniteGroup::cyclic(n);
    let mid = Subgroup::generated(&g, &[2]).unwrap();
    let triv = Subgroup::trivial(&g);
    CoSoficChain::new(g, triv.clone(), vec![(mid.clone(), mid), (triv.clone(), triv)]).unwrap()
}

#[test]
fn chain_product_preserves_invariants() {
    let c1 = strictly_decreasing_chain(4);
    let c2 = strictly_decreasing_chain(8);
    let p = c1.product(&c2, &caps()).unwrap();
    p.validate().unwrap();
    assert_eq!(p.parent.order(), 32);
    assert_eq!(p.stages.len(), 2);
    // componentwise orders
    assert_eq!(p.stages[0].0.len(), 2 * 4);
    assert_eq!(p.stages[1].0.len(), 1);
}

#[test]
fn chain_product_pads_shorter_chain() {
    let c1 = strictly_decreasing_chain(4);
    let mut c2 = strictly_decreasing_chain(8);
    c2.stages.push(c2.stages.last().unwrap().clone());
    let p = c1.product(&c2, &caps()).unwrap();
    p.validate().unwrap();
    assert_eq!(p.stages.len(), 3);
}

#[test]
fn product_with_trivial_chain_is_isomorphic() {
    let c1 = strictly_decreasing_chain(4);
    let t = FiniteGroup::trivial();
    let triv_chain = CoSoficChain::new(
        t.clone(),
        Subgroup::full(&t),
        vec![(Subgroup::full(&t), Subgroup::full(&t))],
    )
    .unwrap();
    let p = c1.product(&triv_chain, &caps()).unwrap();
    p.validate().unwrap();
    assert_eq!(p.parent.order(), c1.parent.order());
    assert_eq!(
        p.stages[0].0.elements().collect::<Vec<_>>(),
        c1.stages[0].0.elements().collect::<Vec<_>>()
    );
}

#[test]
fn subgroup_constructors_validate() {
    let (g, s) = sym3();
    assert!(Subgroup::new(&g, vec![0, s]).is_ok());
    // missing identity
    assert!(matches!(
        Subgroup::new(&g, vec![s]),
        Err(GroupError::MissingIdentity)
    ));
    // not closed: {0, r} where r has order 3
    let r = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
    assert!(matches!(
        Subgroup::new(&g, vec![0, r]),
        Err(GroupError::NotClosed(_, _, _))
    ));
    assert_eq!(Subgroup::generated(&g, &[r]).unwrap().len(), 3);
}

#[test]
fn element_orders() {
    let (g, s) = sym3();
    assert_eq!(g.element_order(0), 1);
    assert_eq!(g.element_order(s), 2);
}
