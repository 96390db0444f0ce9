//! Facet-pairing triangulations, generic over the number of vertex labels
//! per simplex.
//!
//! A triangulation is a set of abstract simplices with `V` vertex labels
//! each, together with an involutive set of facet gluings. Each gluing pairs
//! the facet opposite vertex `f` of one simplex with the facet opposite
//! vertex `g` of another via a degree-`V` label bijection sending `f` to `g`
//! (the omitted vertex goes to the omitted vertex). `V = 5` gives
//! 4-dimensional triangulations, `V = 4` the ideal 3-dimensional ones
//! induced on their boundary.

use std::fmt;

use thiserror::Error;

use crate::perm::Perm;
use crate::unionfind::UnionFind;

/// One of the `V` facets of a simplex, named by the omitted vertex label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FacetSlot {
    pub simplex: usize,
    pub facet: u8,
}

impl fmt::Display for FacetSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.simplex, self.facet)
    }
}

/// A facet pairing: `map` is a label bijection with `map[from.facet] == to.facet`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gluing<const V: usize> {
    pub from: FacetSlot,
    pub to: FacetSlot,
    pub map: Perm<V>,
}

impl<const V: usize> Gluing<V> {
    pub fn new(from: FacetSlot, to: FacetSlot, map: Perm<V>) -> Self {
        Gluing { from, to, map }
    }

    /// The same identification read in the other direction.
    pub fn inverse(&self) -> Self {
        Gluing {
            from: self.to,
            to: self.from,
            map: self.map.inverse(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GluingError {
    #[error("simplex index {index} out of range (have {count} simplices)")]
    SimplexOutOfRange { index: usize, count: usize },
    #[error("facet label {0} out of range")]
    FacetOutOfRange(u8),
    #[error("facet {0} glued to itself")]
    GluedToItself(FacetSlot),
    #[error("map must send omitted vertex {from_facet} to omitted vertex {to_facet}, but sends it to {image}")]
    OmittedVertexRule {
        from_facet: u8,
        to_facet: u8,
        image: u8,
    },
    #[error("facet {0} is already glued")]
    AlreadyGlued(FacetSlot),
}

/// Raised by operations that require every facet slot to be paired.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("triangulation is not closed: {} unpaired facet(s)", unpaired.len())]
pub struct NotClosed {
    pub unpaired: Vec<FacetSlot>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub num_simplices: usize,
    pub num_gluings: usize,
    pub closed: bool,
    pub unpaired: Vec<FacetSlot>,
    /// Whether every stored gluing and its reverse are mutually inverse.
    /// Construction maintains this; the check guards hand-edited state.
    pub involution_consistent: bool,
}

/// A codimension-2 face slot, named by its two omitted vertex labels.
///
/// For `V = 5` these are the 2-faces of a 4-simplex (10 per simplex), for
/// `V = 4` the edges of a tetrahedron (6 per simplex). The face is contained
/// in exactly the two facets named by `omitted`, which makes the incidence
/// graph under gluings 2-regular: its orbits are the cycles below.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RidgeSlot {
    pub simplex: usize,
    /// Omitted label pair, always stored with `omitted.0 < omitted.1`.
    pub omitted: (u8, u8),
}

impl RidgeSlot {
    pub fn new(simplex: usize, a: u8, b: u8) -> Self {
        assert!(a != b);
        RidgeSlot {
            simplex,
            omitted: (a.min(b), a.max(b)),
        }
    }

    /// The labels spanned by the face (all labels except the omitted pair).
    pub fn spanned<const V: usize>(&self) -> Vec<u8> {
        (0..V as u8)
            .filter(|&l| l != self.omitted.0 && l != self.omitted.1)
            .collect()
    }
}

impl fmt::Display for RidgeSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{{},{}}})", self.simplex, self.omitted.0, self.omitted.1)
    }
}

/// Conjugacy class of a cycle's return map on the spanned labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReturnClass {
    Identity,
    Transposition,
    ThreeCycle,
}

impl fmt::Display for ReturnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReturnClass::Identity => "identity",
            ReturnClass::Transposition => "transposition",
            ReturnClass::ThreeCycle => "three_cycle",
        };
        f.write_str(s)
    }
}

/// The orbit of a codimension-2 face slot under alternating
/// "other containing facet" / "apply gluing" steps.
///
/// `slots` lists the distinct slots in traversal order starting from the
/// lexicographically least one; `holonomy` is the composition of the gluing
/// maps around the cycle, which fixes the starting slot's spanned label set.
#[derive(Clone, Debug)]
pub struct RidgeCycle<const V: usize> {
    pub slots: Vec<RidgeSlot>,
    pub holonomy: Perm<V>,
}

impl<const V: usize> RidgeCycle<V> {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Return map as `(label, image)` pairs over the starting slot's spanned labels.
    pub fn return_images(&self) -> Vec<(u8, u8)> {
        self.slots[0]
            .spanned::<V>()
            .into_iter()
            .map(|l| (l, self.holonomy.image(l)))
            .collect()
    }

    pub fn return_class(&self) -> ReturnClass {
        let moved = self
            .return_images()
            .into_iter()
            .filter(|&(l, img)| l != img)
            .count();
        match moved {
            0 => ReturnClass::Identity,
            2 => ReturnClass::Transposition,
            3 => ReturnClass::ThreeCycle,
            _ => unreachable!("return map permutes at most 3 labels"),
        }
    }
}

/// A facet-pairing triangulation with `V` vertex labels per simplex.
///
/// Gluings are stored in both directions; the involution invariant (a slot
/// glued to another is glued back by the inverse map) holds by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangulation<const V: usize> {
    table: Vec<[Option<(FacetSlot, Perm<V>)>; V]>,
}

impl<const V: usize> Triangulation<V> {
    /// A triangulation with `n >= 1` simplices and no gluings.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a triangulation has at least one simplex");
        Triangulation {
            table: vec![[None; V]; n],
        }
    }

    pub fn num_simplices(&self) -> usize {
        self.table.len()
    }

    fn check_slot(&self, slot: FacetSlot) -> Result<(), GluingError> {
        if slot.simplex >= self.table.len() {
            return Err(GluingError::SimplexOutOfRange {
                index: slot.simplex,
                count: self.table.len(),
            });
        }
        if slot.facet as usize >= V {
            return Err(GluingError::FacetOutOfRange(slot.facet));
        }
        Ok(())
    }

    /// Records a gluing and its inverse. Rejects self-gluings, occupied
    /// slots, and maps violating the omitted-vertex rule.
    pub fn add_gluing(&mut self, g: Gluing<V>) -> Result<(), GluingError> {
        self.check_slot(g.from)?;
        self.check_slot(g.to)?;
        if g.from == g.to {
            return Err(GluingError::GluedToItself(g.from));
        }
        if g.map.image(g.from.facet) != g.to.facet {
            return Err(GluingError::OmittedVertexRule {
                from_facet: g.from.facet,
                to_facet: g.to.facet,
                image: g.map.image(g.from.facet),
            });
        }
        if self.table[g.from.simplex][g.from.facet as usize].is_some() {
            return Err(GluingError::AlreadyGlued(g.from));
        }
        if self.table[g.to.simplex][g.to.facet as usize].is_some() {
            return Err(GluingError::AlreadyGlued(g.to));
        }
        self.table[g.from.simplex][g.from.facet as usize] = Some((g.to, g.map));
        self.table[g.to.simplex][g.to.facet as usize] = Some((g.from, g.map.inverse()));
        Ok(())
    }

    /// The gluing attached to `slot`, if any, read from that side.
    pub fn gluing_at(&self, slot: FacetSlot) -> Option<Gluing<V>> {
        let (to, map) = self.table[slot.simplex][slot.facet as usize]?;
        Some(Gluing {
            from: slot,
            to,
            map,
        })
    }

    /// Each identification once, from its lexicographically smaller slot.
    pub fn gluings(&self) -> Vec<Gluing<V>> {
        let mut out = Vec::new();
        for s in 0..self.table.len() {
            for f in 0..V as u8 {
                let from = FacetSlot { simplex: s, facet: f };
                if let Some(g) = self.gluing_at(from) {
                    if g.from < g.to {
                        out.push(g);
                    }
                }
            }
        }
        out
    }

    pub fn num_gluings(&self) -> usize {
        self.gluings().len()
    }

    pub fn unpaired_slots(&self) -> Vec<FacetSlot> {
        let mut out = Vec::new();
        for (s, row) in self.table.iter().enumerate() {
            for (f, entry) in row.iter().enumerate() {
                if entry.is_none() {
                    out.push(FacetSlot {
                        simplex: s,
                        facet: f as u8,
                    });
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|e| e.is_some()))
    }

    fn require_closed(&self) -> Result<(), NotClosed> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(NotClosed {
                unpaired: self.unpaired_slots(),
            })
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let unpaired = self.unpaired_slots();
        let mut involution_consistent = true;
        for s in 0..self.table.len() {
            for f in 0..V as u8 {
                let slot = FacetSlot { simplex: s, facet: f };
                if let Some(g) = self.gluing_at(slot) {
                    let back = self.table[g.to.simplex][g.to.facet as usize];
                    if back != Some((slot, g.map.inverse())) {
                        involution_consistent = false;
                    }
                }
            }
        }
        ValidationReport {
            num_simplices: self.num_simplices(),
            num_gluings: self.num_gluings(),
            closed: unpaired.is_empty(),
            unpaired,
            involution_consistent,
        }
    }

    /// Orientation assignment (+1/-1 per simplex) such that every gluing is
    /// orientation-reversing: `s(a) * s(b) * sign(map) == -1`. Returns `None`
    /// iff the parity constraints are contradictory. Constraints run over the
    /// existing gluings only, so partial triangulations are accepted; the
    /// first simplex of each connected component gets `+1`.
    pub fn orientability(&self) -> Option<Vec<i8>> {
        let n = self.num_simplices();
        let mut sign: Vec<Option<i8>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if sign[start].is_some() {
                continue;
            }
            sign[start] = Some(1);
            queue.push_back(start);
            while let Some(s) = queue.pop_front() {
                let ss = sign[s].unwrap();
                for f in 0..V as u8 {
                    if let Some(g) = self.gluing_at(FacetSlot { simplex: s, facet: f }) {
                        let forced = -ss * g.map.sign();
                        match sign[g.to.simplex] {
                            None => {
                                sign[g.to.simplex] = Some(forced);
                                queue.push_back(g.to.simplex);
                            }
                            Some(existing) => {
                                if existing != forced {
                                    return None;
                                }
                            }
                        }
                    }
                }
            }
        }
        Some(sign.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Classes of `(simplex, vertex)` slots under all gluings.
    pub fn vertex_classes(&self) -> Vec<Vec<(usize, u8)>> {
        let n = self.num_simplices();
        let mut uf = UnionFind::new(n * V);
        let idx = |s: usize, v: u8| s * V + v as usize;
        for g in self.gluings() {
            for v in 0..V as u8 {
                if v == g.from.facet {
                    continue; // the omitted vertex is not on the facet
                }
                uf.union(idx(g.from.simplex, v), idx(g.to.simplex, g.map.image(v)));
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| (i / V, (i % V) as u8)).collect())
            .collect()
    }

    /// Classes of `(simplex, spanned edge)` slots under all gluings.
    /// Edges are unordered label pairs; there are `V*(V-1)/2` per simplex.
    pub fn edge_classes(&self) -> Vec<Vec<(usize, (u8, u8))>> {
        let pairs: Vec<(u8, u8)> = (0..V as u8)
            .flat_map(|a| ((a + 1)..V as u8).map(move |b| (a, b)))
            .collect();
        let pair_index = |a: u8, b: u8| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let per = pairs.len();
        let n = self.num_simplices();
        let mut uf = UnionFind::new(n * per);
        for g in self.gluings() {
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if a == g.from.facet || b == g.from.facet {
                    continue; // edge not contained in the glued facet
                }
                let img = pair_index(g.map.image(a), g.map.image(b));
                uf.union(g.from.simplex * per + i, g.to.simplex * per + img);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| (i / per, pairs[i % per])).collect())
            .collect()
    }

    /// One traversal step: leave `slot` through the facet `exit`, apply the
    /// gluing there, and arrive at the image slot poised to leave through the
    /// image of the other omitted label.
    fn ridge_step(
        &self,
        slot: RidgeSlot,
        exit: u8,
    ) -> Result<(RidgeSlot, u8, Perm<V>), NotClosed> {
        debug_assert!(exit == slot.omitted.0 || exit == slot.omitted.1);
        let entry_side = if exit == slot.omitted.0 {
            slot.omitted.1
        } else {
            slot.omitted.0
        };
        let g = self
            .gluing_at(FacetSlot {
                simplex: slot.simplex,
                facet: exit,
            })
            .ok_or_else(|| NotClosed {
                unpaired: self.unpaired_slots(),
            })?;
        let next = RidgeSlot::new(g.to.simplex, g.map.image(exit), g.map.image(entry_side));
        Ok((next, g.map.image(entry_side), g.map))
    }

    /// The cycle through `start`, traversed leaving first through
    /// `first_exit` (one of the slot's two omitted labels).
    pub fn ridge_cycle_from(
        &self,
        start: RidgeSlot,
        first_exit: u8,
    ) -> Result<RidgeCycle<V>, NotClosed> {
        assert!(first_exit == start.omitted.0 || first_exit == start.omitted.1);
        let mut slots = vec![start];
        let mut holonomy = Perm::<V>::identity();
        let (mut cur, mut exit) = (start, first_exit);
        loop {
            let (next, next_exit, map) = self.ridge_step(cur, exit)?;
            holonomy = holonomy.then(&map);
            cur = next;
            exit = next_exit;
            if cur == start && exit == first_exit {
                break;
            }
            slots.push(cur);
        }
        Ok(RidgeCycle { slots, holonomy })
    }

    /// All cycles of codimension-2 face slots. Each cycle starts at its
    /// lexicographically least slot and leaves first through the smaller
    /// omitted label.
    pub fn ridge_cycles(&self) -> Result<Vec<RidgeCycle<V>>, NotClosed> {
        self.require_closed()?;
        let mut visited = std::collections::HashSet::new();
        let mut cycles = Vec::new();
        for s in 0..self.num_simplices() {
            for a in 0..V as u8 {
                for b in (a + 1)..V as u8 {
                    let start = RidgeSlot::new(s, a, b);
                    if visited.contains(&start) {
                        continue;
                    }
                    let cycle = self.ridge_cycle_from(start, start.omitted.0)?;
                    for slot in &cycle.slots {
                        visited.insert(*slot);
                    }
                    cycles.push(cycle);
                }
            }
        }
        Ok(cycles)
    }

    /// The cycle through `start`, traversed leaving first through
    /// `first_exit`, reporting at each arrival the images of `markers`
    /// (labels of the starting slot, typically its spanned labels in some
    /// chosen order). Entry 0 is the starting slot with the markers as given.
    pub fn ridge_trace(
        &self,
        start: RidgeSlot,
        markers: &[u8],
        first_exit: u8,
    ) -> Result<Vec<(RidgeSlot, Vec<u8>)>, NotClosed> {
        assert!(first_exit == start.omitted.0 || first_exit == start.omitted.1);
        let mut trace = vec![(start, markers.to_vec())];
        let mut current_markers = markers.to_vec();
        let (mut cur, mut exit) = (start, first_exit);
        loop {
            let (next, next_exit, map) = self.ridge_step(cur, exit)?;
            for m in &mut current_markers {
                *m = map.image(*m);
            }
            cur = next;
            exit = next_exit;
            if cur == start && exit == first_exit {
                break;
            }
            trace.push((cur, current_markers.clone()));
        }
        Ok(trace)
    }

    /// Connected components of the simplex adjacency graph, each sorted,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_simplices();
        let mut uf = UnionFind::new(n);
        for g in self.gluings() {
            uf.union(g.from.simplex, g.to.simplex);
        }
        uf.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The triangulation obtained by sending simplex `i` to index
    /// `simplex_map[i]` and relabeling its vertices by `label_maps[i]`.
    /// `simplex_map` must be a permutation of `0..n`.
    pub fn relabeled(&self, simplex_map: &[usize], label_maps: &[Perm<V>]) -> Self {
        let n = self.num_simplices();
        assert_eq!(simplex_map.len(), n);
        assert_eq!(label_maps.len(), n);
        {
            let mut seen = vec![false; n];
            for &t in simplex_map {
                assert!(t < n && !seen[t], "simplex_map must be a permutation");
                seen[t] = true;
            }
        }
        let mut out = Triangulation::new(n);
        for g in self.gluings() {
            let (a, b) = (g.from.simplex, g.to.simplex);
            let new = Gluing {
                from: FacetSlot {
                    simplex: simplex_map[a],
                    facet: label_maps[a].image(g.from.facet),
                },
                to: FacetSlot {
                    simplex: simplex_map[b],
                    facet: label_maps[b].image(g.to.facet),
                },
                map: label_maps[a].inverse().then(&g.map).then(&label_maps[b]),
            };
            out.add_gluing(new).expect("relabeling preserves validity");
        }
        out
    }

    /// The sub-triangulation induced on a set of simplex indices, which must
    /// be closed under gluings (a connected component). Simplices are
    /// re-indexed by their order in `members`.
    pub fn restricted_to(&self, members: &[usize]) -> Self {
        let mut new_index = vec![usize::MAX; self.num_simplices()];
        for (i, &m) in members.iter().enumerate() {
            new_index[m] = i;
        }
        let mut out = Triangulation::new(members.len());
        for g in self.gluings() {
            if new_index[g.from.simplex] == usize::MAX {
                continue;
            }
            assert!(
                new_index[g.to.simplex] != usize::MAX,
                "member set not closed under gluings"
            );
            out.add_gluing(Gluing {
                from: FacetSlot {
                    simplex: new_index[g.from.simplex],
                    facet: g.from.facet,
                },
                to: FacetSlot {
                    simplex: new_index[g.to.simplex],
                    facet: g.to.facet,
                },
                map: g.map,
            })
            .expect("restriction preserves validity");
        }
        out
    }
}
