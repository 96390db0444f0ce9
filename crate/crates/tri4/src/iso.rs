//! Combinatorial isomorphism, canonical signatures and symmetry
//! enumeration.
//!
//! Everything here works by seeding an image for one simplex and
//! propagating across gluings: a seed is a (target simplex, label
//! permutation) pair for the smallest unmapped source simplex, and the rest
//! of the map is forced. Signatures take the lexicographic minimum of a
//! breadth-first canonical encoding over all seeds, so equal signatures are
//! equivalent to isomorphism under this fixed algorithm.
//!
//! Seed exploration is embarrassingly parallel; with the `parallel` feature
//! (on by default) it runs on rayon, and the `_sequential` variants remain
//! available for comparison. Both produce identical results: the minimum of
//! the encodings does not depend on evaluation order, and first-match
//! searches use order-respecting reductions.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::perm::Perm;
use crate::tri::{FacetSlot, Triangulation};

/// Whether an isomorphism preserves or reverses the canonical orientation
/// assignments of its endpoints; `Undefined` when either side is
/// non-orientable (or the effect differs between components).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrientationEffect {
    Preserves,
    Reverses,
    Undefined,
}

impl OrientationEffect {
    fn product(self, other: Self) -> Self {
        use OrientationEffect::*;
        match (self, other) {
            (Undefined, _) | (_, Undefined) => Undefined,
            (Preserves, x) => x,
            (Reverses, Preserves) => Reverses,
            (Reverses, Reverses) => Preserves,
        }
    }
}

/// A label-respecting bijection of simplices transporting every gluing of
/// the source onto a gluing of the target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isomorphism<const V: usize> {
    /// Image simplex of each source simplex.
    pub simplex_map: Vec<usize>,
    /// Label permutation applied on each source simplex.
    pub label_maps: Vec<Perm<V>>,
    pub orientation_effect: OrientationEffect,
}

impl<const V: usize> Isomorphism<V> {
    pub fn identity(n: usize) -> Self {
        Isomorphism {
            simplex_map: (0..n).collect(),
            label_maps: vec![Perm::identity(); n],
            orientation_effect: OrientationEffect::Undefined,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.simplex_map.iter().enumerate().all(|(i, &t)| i == t)
            && self.label_maps.iter().all(|p| p.is_identity())
    }

    /// Composition applying `self` first, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        let simplex_map: Vec<usize> = self
            .simplex_map
            .iter()
            .map(|&t| next.simplex_map[t])
            .collect();
        let label_maps: Vec<Perm<V>> = self
            .simplex_map
            .iter()
            .enumerate()
            .map(|(s, &t)| self.label_maps[s].then(&next.label_maps[t]))
            .collect();
        Isomorphism {
            simplex_map,
            label_maps,
            orientation_effect: self.orientation_effect.product(next.orientation_effect),
        }
    }

    /// Checks that this datum really transports `a` onto `b`.
    pub fn transports(&self, a: &Triangulation<V>, b: &Triangulation<V>) -> bool {
        let n = a.num_simplices();
        if b.num_simplices() != n || self.simplex_map.len() != n || self.label_maps.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &t in &self.simplex_map {
            if t >= n || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        for s in 0..n {
            for f in 0..V as u8 {
                let image_slot = FacetSlot {
                    simplex: self.simplex_map[s],
                    facet: self.label_maps[s].image(f),
                };
                match a.gluing_at(FacetSlot { simplex: s, facet: f }) {
                    None => {
                        if b.gluing_at(image_slot).is_some() {
                            return false;
                        }
                    }
                    Some(g) => {
                        let Some(h) = b.gluing_at(image_slot) else {
                            return false;
                        };
                        let s2 = g.to.simplex;
                        if h.to.simplex != self.simplex_map[s2] {
                            return false;
                        }
                        // transported map must match: p_{s2} o g = h o p_s
                        let lhs = g.map.then(&self.label_maps[s2]);
                        let rhs = self.label_maps[s].then(&h.map);
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn orientation_effect<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
    simplex_map: &[usize],
    label_maps: &[Perm<V>],
) -> OrientationEffect {
    let (Some(sa), Some(sb)) = (a.orientability(), b.orientability()) else {
        return OrientationEffect::Undefined;
    };
    let mut effect: Option<i8> = None;
    for comp in a.components() {
        let r = comp[0];
        let e = sa[r] * label_maps[r].sign() * sb[simplex_map[r]];
        match effect {
            None => effect = Some(e),
            Some(prev) if prev != e => return OrientationEffect::Undefined,
            _ => {}
        }
    }
    match effect {
        Some(1) => OrientationEffect::Preserves,
        Some(-1) => OrientationEffect::Reverses,
        _ => OrientationEffect::Undefined,
    }
}

/// Partial state of a backtracking embedding.
#[derive(Clone)]
struct PartialMap<const V: usize> {
    simplex_map: Vec<Option<usize>>,
    label_maps: Vec<Option<Perm<V>>>,
    target_used: Vec<bool>,
}

impl<const V: usize> PartialMap<V> {
    fn new(n: usize) -> Self {
        PartialMap {
            simplex_map: vec![None; n],
            label_maps: vec![None; n],
            target_used: vec![false; n],
        }
    }
}

/// Extends `state` by the forced propagation of the seed
/// `s0 -> (t0, p0)` across the component of `s0`. Returns the extended
/// state, or `None` on any conflict.
fn propagate_seed<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
    state: &PartialMap<V>,
    s0: usize,
    t0: usize,
    p0: Perm<V>,
) -> Option<PartialMap<V>> {
    if state.target_used[t0] {
        return None;
    }
    let mut st = state.clone();
    st.simplex_map[s0] = Some(t0);
    st.label_maps[s0] = Some(p0);
    st.target_used[t0] = true;
    let mut queue = std::collections::VecDeque::from([s0]);
    while let Some(s) = queue.pop_front() {
        let t = st.simplex_map[s].unwrap();
        let p = st.label_maps[s].unwrap();
        for f in 0..V as u8 {
            let image_slot = FacetSlot {
                simplex: t,
                facet: p.image(f),
            };
            match a.gluing_at(FacetSlot { simplex: s, facet: f }) {
                None => {
                    // unpaired slots must map to unpaired slots
                    if b.gluing_at(image_slot).is_some() {
                        return None;
                    }
                }
                Some(g) => {
                    let h = b.gluing_at(image_slot)?;
                    let s2 = g.to.simplex;
                    let required_t = h.to.simplex;
                    let required_p = g.map.inverse().then(&p).then(&h.map);
                    match st.simplex_map[s2] {
                        Some(existing_t) => {
                            if existing_t != required_t
                                || st.label_maps[s2] != Some(required_p)
                            {
                                return None;
                            }
                        }
                        None => {
                            if st.target_used[required_t] {
                                return None;
                            }
                            st.simplex_map[s2] = Some(required_t);
                            st.label_maps[s2] = Some(required_p);
                            st.target_used[required_t] = true;
                            queue.push_back(s2);
                        }
                    }
                }
            }
        }
    }
    Some(st)
}

fn finish<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
    st: PartialMap<V>,
) -> Isomorphism<V> {
    let simplex_map: Vec<usize> = st.simplex_map.into_iter().map(|t| t.unwrap()).collect();
    let label_maps: Vec<Perm<V>> = st.label_maps.into_iter().map(|p| p.unwrap()).collect();
    let effect = orientation_effect(a, b, &simplex_map, &label_maps);
    Isomorphism {
        simplex_map,
        label_maps,
        orientation_effect: effect,
    }
}

/// Embeds the remaining source components in order, backtracking over seed
/// choices; seeds are tried in (target simplex, lexicographic permutation)
/// order so the first complete match is deterministic.
fn embed_remaining<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
    state: PartialMap<V>,
) -> Option<PartialMap<V>> {
    let Some(s0) = state.simplex_map.iter().position(|m| m.is_none()) else {
        return Some(state);
    };
    for t0 in 0..b.num_simplices() {
        if state.target_used[t0] {
            continue;
        }
        for p0 in Perm::<V>::all() {
            if let Some(next) = propagate_seed(a, b, &state, s0, t0, p0) {
                if let Some(done) = embed_remaining(a, b, next) {
                    return Some(done);
                }
            }
        }
    }
    None
}

/// The first isomorphism from `a` to `b` in deterministic seed order
/// (target simplices ascending, label permutations lexicographic), or
/// `None`. Unpaired facets must correspond, so partial triangulations
/// compare correctly as well.
pub fn isomorphic<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
) -> Option<Isomorphism<V>> {
    if a.num_simplices() != b.num_simplices() {
        return None;
    }
    let n = a.num_simplices();
    #[cfg(feature = "parallel")]
    {
        if a.is_connected() {
            let seeds: Vec<(usize, Perm<V>)> = (0..n)
                .flat_map(|t0| Perm::<V>::all().map(move |p0| (t0, p0)))
                .collect();
            return seeds
                .into_par_iter()
                .find_map_first(|(t0, p0)| {
                    propagate_seed(a, b, &PartialMap::new(n), 0, t0, p0)
                })
                .map(|st| finish(a, b, st));
        }
    }
    embed_remaining(a, b, PartialMap::new(n)).map(|st| finish(a, b, st))
}

/// Sequential reference implementation of [`isomorphic`].
pub fn isomorphic_sequential<const V: usize>(
    a: &Triangulation<V>,
    b: &Triangulation<V>,
) -> Option<Isomorphism<V>> {
    if a.num_simplices() != b.num_simplices() {
        return None;
    }
    embed_remaining(a, b, PartialMap::new(a.num_simplices())).map(|st| finish(a, b, st))
}

/// All self-isomorphisms of a connected triangulation, in seed order. The
/// list always contains the identity and is closed under composition.
pub fn symmetries<const V: usize>(t: &Triangulation<V>) -> Vec<Isomorphism<V>> {
    assert!(t.is_connected(), "symmetry enumeration expects a connected triangulation");
    let n = t.num_simplices();
    let seeds: Vec<(usize, Perm<V>)> = (0..n)
        .flat_map(|t0| Perm::<V>::all().map(move |p0| (t0, p0)))
        .collect();
    let run = |(t0, p0): (usize, Perm<V>)| {
        propagate_seed(t, t, &PartialMap::new(n), 0, t0, p0).map(|st| finish(t, t, st))
    };
    #[cfg(feature = "parallel")]
    return seeds.into_par_iter().filter_map(run).collect();
    #[cfg(not(feature = "parallel"))]
    seeds.into_iter().filter_map(run).collect()
}

/// Sequential reference implementation of [`symmetries`].
pub fn symmetries_sequential<const V: usize>(t: &Triangulation<V>) -> Vec<Isomorphism<V>> {
    assert!(t.is_connected(), "symmetry enumeration expects a connected triangulation");
    let n = t.num_simplices();
    (0..n)
        .flat_map(|t0| Perm::<V>::all().map(move |p0| (t0, p0)))
        .filter_map(|(t0, p0)| {
            propagate_seed(t, t, &PartialMap::new(n), 0, t0, p0).map(|st| finish(t, t, st))
        })
        .collect()
}

fn perm_digits<const V: usize>(p: Perm<V>) -> String {
    p.images().iter().map(|d| d.to_string()).collect()
}

/// Breadth-first canonical encoding anchored at `(root, p0)`: newly
/// discovered simplices are labeled so their discovery gluing becomes the
/// identity, and every slot is recorded as `dest.perm` (or `x` when
/// unpaired) in new-index order.
fn encode<const V: usize>(t: &Triangulation<V>, root: usize, p0: Perm<V>) -> String {
    let n = t.num_simplices();
    let mut new2old: Vec<(usize, Perm<V>)> = vec![(root, p0)];
    let mut old2new: Vec<Option<usize>> = vec![None; n];
    old2new[root] = Some(0);
    let mut records: Vec<String> = Vec::with_capacity(n * V);
    let mut i = 0;
    while i < new2old.len() {
        let (s, q) = new2old[i];
        for f_new in 0..V as u8 {
            let f_old = q.inverse().image(f_new);
            match t.gluing_at(FacetSlot { simplex: s, facet: f_old }) {
                None => records.push("x".to_string()),
                Some(g) => {
                    let dest_new = match old2new[g.to.simplex] {
                        Some(j) => j,
                        None => {
                            let j = new2old.len();
                            old2new[g.to.simplex] = Some(j);
                            new2old.push((g.to.simplex, g.map.inverse().then(&q)));
                            j
                        }
                    };
                    let q2 = new2old[dest_new].1;
                    let m_new = q.inverse().then(&g.map).then(&q2);
                    records.push(format!("{dest_new}.{}", perm_digits(m_new)));
                }
            }
        }
        i += 1;
    }
    assert_eq!(new2old.len(), n, "encoding requires a connected triangulation");
    format!("t{};{};{}", V - 1, n, records.join(","))
}

fn canonical_signature<const V: usize>(t: &Triangulation<V>) -> String {
    let n = t.num_simplices();
    let seeds: Vec<(usize, Perm<V>)> = (0..n)
        .flat_map(|root| Perm::<V>::all().map(move |p0| (root, p0)))
        .collect();
    #[cfg(feature = "parallel")]
    return seeds
        .into_par_iter()
        .map(|(root, p0)| encode(t, root, p0))
        .min()
        .expect("at least one seed");
    #[cfg(not(feature = "parallel"))]
    seeds
        .into_iter()
        .map(|(root, p0)| encode(t, root, p0))
        .min()
        .expect("at least one seed")
}

/// Canonical signature string: the minimum breadth-first encoding over all
/// (root, labeling) seeds. Signatures are equal exactly when the
/// triangulations are isomorphic; a disconnected triangulation gets its
/// component signatures sorted and joined with `+`.
pub fn signature<const V: usize>(t: &Triangulation<V>) -> String {
    let comps = t.components();
    if comps.len() == 1 {
        canonical_signature(t)
    } else {
        let mut sigs: Vec<String> = comps
            .iter()
            .map(|c| canonical_signature(&t.restricted_to(c)))
            .collect();
        sigs.sort();
        sigs.join("+")
    }
}

/// Sequential reference implementation of [`signature`].
pub fn signature_sequential<const V: usize>(t: &Triangulation<V>) -> String {
    let comps = t.components();
    if comps.len() == 1 {
        let n = t.num_simplices();
        (0..n)
            .flat_map(|root| Perm::<V>::all().map(move |p0| (root, p0)))
            .map(|(root, p0)| encode(t, root, p0))
            .min()
            .expect("at least one seed")
    } else {
        let mut sigs: Vec<String> = comps
            .iter()
            .map(|c| signature_sequential(&t.restricted_to(c)))
            .collect();
        sigs.sort();
        sigs.join("+")
    }
}
