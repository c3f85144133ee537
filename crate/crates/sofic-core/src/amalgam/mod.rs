//! Words and canonical normal forms in amalgamated free products.
//!
//! An [`AmalgamSpec`] is a family of factors sharing a common finite subgroup
//! `H`: plain finite factors (copies of a finite group containing an embedded
//! copy of `H`) and `Z`-extended factors whose elements are pairs `(g, m)`
//! with `m` an exact integer — these model the `H × Z` and `G × Z` factors
//! arising from graph-of-groups doubles.
//!
//! Every element of the amalgam has a unique canonical form: a single `H`
//! head on the left followed by a sequence of non-identity coset-transversal
//! letters with adjacent letters in distinct factors. [`AmalgamSpec::normalize`]
//! computes it by rightmost-first absorption, which makes equality testing a
//! structural comparison.

mod oracle;

pub use oracle::{rewrite_reaches_identity, EqualityOracle, OracleOutcome, RewriteOutcome};

use crate::caps::Caps;
use crate::group::{FiniteGroup, GroupError, Subgroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AmalgamError {
    #[error("factor id {0} out of range ({1} factors)")]
    FactorOutOfRange(usize, usize),
    #[error("malformed letter: {0}")]
    MalformedLetter(String),
    #[error("ball exceeded cap of {0} elements")]
    BallTooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad graph: {0}")]
    BadGraph(String),
    #[error("bad factor embedding: {0}")]
    BadEmbedding(String),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
}

/// Element of one factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorElem {
    /// Element index in a plain finite factor.
    Finite(usize),
    /// Pair `(g, m)` in a `Z`-extended factor; the exponent is exact.
    Shifted(usize, BigInt),
}

impl FactorElem {
    pub fn shifted(g: usize, m: i64) -> Self {
        FactorElem::Shifted(g, BigInt::from(m))
    }
}

/// One letter of a word: an element of a named factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub factor: usize,
    pub value: FactorElem,
}

impl Letter {
    pub fn finite(factor: usize, value: usize) -> Self {
        Letter {
            factor,
            value: FactorElem::Finite(value),
        }
    }

    pub fn shifted(factor: usize, g: usize, m: i64) -> Self {
        Letter {
            factor,
            value: FactorElem::shifted(g, m),
        }
    }
}

/// One factor of an amalgam: a finite group with a designated embedded copy
/// of the common subgroup `H`, optionally extended by a central `Z`
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    group: FiniteGroup,
    /// `h_embedding[h]` is the factor element representing `h ∈ H`.
    h_embedding: Vec<u32>,
    /// Elements are `(g, m)` pairs when set; plain group elements otherwise.
    z_extended: bool,
    /// `h_preimage[g]` is `Some(h)` iff `g` is the image of `h`.
    h_preimage: Vec<Option<u32>>,
    /// `decomp[g] = (h, t)` with `g = embed(h) · t` and `t` the minimal-index
    /// representative of the right coset `H·g`.
    decomp: Vec<(u32, u32)>,
    /// Ascending minimal-index transversal of the right cosets of `H`.
    transversal: Vec<u32>,
}

impl Factor {
    fn build(
        group: FiniteGroup,
        h_embedding: Vec<u32>,
        z_extended: bool,
        common: &FiniteGroup,
    ) -> Result<Self, AmalgamError> {
        if h_embedding.len() != common.order() {
            return Err(AmalgamError::BadEmbedding(format!(
                "embedding lists {} of {} common elements",
                h_embedding.len(),
                common.order()
            )));
        }
        let mut h_preimage = vec![None; group.order()];
        for (h, &img) in h_embedding.iter().enumerate() {
            let img = img as usize;
            group.check_index(img).map_err(AmalgamError::Group)?;
            if h_preimage[img].is_some() {
                return Err(AmalgamError::BadEmbedding("embedding not injective".into()));
            }
            h_preimage[img] = Some(h as u32);
        }
        if h_embedding[0] != 0 {
            return Err(AmalgamError::BadEmbedding(
                "embedding must send identity to identity".into(),
            ));
        }
        for a in 0..common.order() {
            for b in 0..common.order() {
                let lhs = group.mul(h_embedding[a] as usize, h_embedding[b] as usize);
                let rhs = h_embedding[common.mul(a, b)] as usize;
                if lhs != rhs {
                    return Err(AmalgamError::BadEmbedding(
                        "embedding is not a homomorphism".into(),
                    ));
                }
            }
        }
        // right coset decomposition g = embed(h) · t, minimal-index reps
        let mut decomp = vec![(0u32, 0u32); group.order()];
        let mut transversal = Vec::new();
        let mut seen = vec![false; group.order()];
        for g in 0..group.order() {
            if seen[g] {
                continue;
            }
            transversal.push(g as u32);
            for (h, &img) in h_embedding.iter().enumerate() {
                let x = group.mul(img as usize, g);
                seen[x] = true;
                decomp[x] = (h as u32, g as u32);
            }
        }
        Ok(Factor {
            group,
            h_embedding,
            z_extended,
            h_preimage,
            decomp,
            transversal,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn is_z_extended(&self) -> bool {
        self.z_extended
    }

    pub fn h_embedding(&self) -> &[u32] {
        &self.h_embedding
    }

    pub fn transversal(&self) -> &[u32] {
        &self.transversal
    }

    fn check_elem(&self, v: &FactorElem) -> Result<(), AmalgamError> {
        match (v, self.z_extended) {
            (FactorElem::Finite(g), false) => {
                if *g < self.group.order() {
                    Ok(())
                } else {
                    Err(AmalgamError::MalformedLetter(format!(
                        "element {} outside factor of order {}",
                        g,
                        self.group.order()
                    )))
                }
            }
            (FactorElem::Shifted(g, _), true) => {
                if *g < self.group.order() {
                    Ok(())
                } else {
                    Err(AmalgamError::MalformedLetter(format!(
                        "element {} outside factor of order {}",
                        g,
                        self.group.order()
                    )))
                }
            }
            (FactorElem::Finite(_), true) => Err(AmalgamError::MalformedLetter(
                "plain element in a Z-extended factor".into(),
            )),
            (FactorElem::Shifted(..), false) => Err(AmalgamError::MalformedLetter(
                "shifted element in a plain factor".into(),
            )),
        }
    }

    fn mul_elem(&self, a: &FactorElem, b: &FactorElem) -> FactorElem {
        match (a, b) {
            (FactorElem::Finite(x), FactorElem::Finite(y)) => {
                FactorElem::Finite(self.group.mul(*x, *y))
            }
            (FactorElem::Shifted(x, m), FactorElem::Shifted(y, k)) => {
                FactorElem::Shifted(self.group.mul(*x, *y), m + k)
            }
            _ => unreachable!("mixed factor elements are rejected at validation"),
        }
    }

    fn inv_elem(&self, a: &FactorElem) -> FactorElem {
        match a {
            FactorElem::Finite(x) => FactorElem::Finite(self.group.inv(*x)),
            FactorElem::Shifted(x, m) => FactorElem::Shifted(self.group.inv(*x), -m),
        }
    }

    fn embed_h(&self, h: usize) -> FactorElem {
        let img = self.h_embedding[h] as usize;
        if self.z_extended {
            FactorElem::Shifted(img, BigInt::zero())
        } else {
            FactorElem::Finite(img)
        }
    }

    /// If the element lies in the embedded copy of `H`, its `H`-index.
    fn try_h(&self, a: &FactorElem) -> Option<usize> {
        match a {
            FactorElem::Finite(x) => self.h_preimage[*x].map(|h| h as usize),
            FactorElem::Shifted(x, m) => {
                if m.is_zero() {
                    self.h_preimage[*x].map(|h| h as usize)
                } else {
                    None
                }
            }
        }
    }

    /// Split `a = embed(h) · rep` with `rep` a transversal representative.
    fn decompose(&self, a: &FactorElem) -> (usize, FactorElem) {
        match a {
            FactorElem::Finite(x) => {
                let (h, t) = self.decomp[*x];
                (h as usize, FactorElem::Finite(t as usize))
            }
            FactorElem::Shifted(x, m) => {
                let (h, t) = self.decomp[*x];
                (h as usize, FactorElem::Shifted(t as usize, m.clone()))
            }
        }
    }

    fn rep_is_trivial(&self, rep: &FactorElem) -> bool {
        match rep {
            FactorElem::Finite(t) => *t == 0,
            FactorElem::Shifted(t, m) => *t == 0 && m.is_zero(),
        }
    }

    fn is_identity_elem(&self, a: &FactorElem) -> bool {
        match a {
            FactorElem::Finite(x) => *x == 0,
            FactorElem::Shifted(x, m) => *x == 0 && m.is_zero(),
        }
    }

    /// Is `a` a valid canonical letter value (a non-identity transversal
    /// representative)?
    fn is_canonical_value(&self, a: &FactorElem) -> bool {
        if self.rep_is_trivial(a) {
            return false;
        }
        let (h, rep) = self.decompose(a);
        h == 0 && rep == *a
    }
}

/// Canonical representative of an amalgam element: an `H` head followed by
/// non-identity transversal letters with adjacent letters in distinct
/// factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub head: usize,
    pub letters: Vec<Letter>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm {
            head: 0,
            letters: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.head == 0 && self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A finite base graph: vertex ids plus undirected edges (loops and
/// multi-edges allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> Self {
        GraphSpec { vertices, edges }
    }

    fn validate(&self) -> Result<Vec<usize>, AmalgamError> {
        if self.vertices.is_empty() {
            return Err(AmalgamError::BadGraph("no vertices".into()));
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.vertices.len() {
            return Err(AmalgamError::BadGraph("duplicate vertex ids".into()));
        }
        for &(u, v) in &self.edges {
            if sorted.binary_search(&u).is_err() || sorted.binary_search(&v).is_err() {
                return Err(AmalgamError::BadGraph(format!(
                    "edge ({u}, {v}) mentions an unknown vertex"
                )));
            }
        }
        Ok(sorted)
    }

    /// Spanning tree by breadth-first search from the minimal vertex id.
    /// Returns one flag per edge (true = tree edge) or an error if the graph
    /// is disconnected. Loops are never tree edges.
    pub fn spanning_tree(&self) -> Result<Vec<bool>, AmalgamError> {
        let sorted = self.validate()?;
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); sorted.len()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            adj[pos[&u]].push((e, pos[&v]));
            adj[pos[&v]].push((e, pos[&u]));
        }
        let mut tree = vec![false; self.edges.len()];
        let mut visited = vec![false; sorted.len()];
        visited[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &(e, y) in &adj[x] {
                if !visited[y] {
                    visited[y] = true;
                    tree[e] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        if reached != sorted.len() {
            return Err(AmalgamError::Disconnected);
        }
        Ok(tree)
    }
}

/// A family of factors over a common finite subgroup `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamSpec {
    common: FiniteGroup,
    factors: Vec<Factor>,
    pub provenance: Option<GraphSpec>,
}

impl AmalgamSpec {
    /// Assemble a spec from explicit factor data. Each entry is
    /// `(group, h_embedding, z_extended)`.
    pub fn new(
        common: FiniteGroup,
        factor_data: Vec<(FiniteGroup, Vec<u32>, bool)>,
    ) -> Result<Self, AmalgamError> {
        let mut factors = Vec::with_capacity(factor_data.len());
        for (group, emb, z) in factor_data {
            factors.push(Factor::build(group, emb, z, &common)?);
        }
        Ok(AmalgamSpec {
            common,
            factors,
            provenance: None,
        })
    }

    /// `copies` identical copies of `G` amalgamated over the subgroup `H`.
    pub fn copies_over(
        g: &FiniteGroup,
        h: &Subgroup,
        copies: usize,
    ) -> Result<Self, AmalgamError> {
        h.check_parent(g)?;
        let (h_group, to_parent) = h.as_group(g)?;
        let emb: Vec<u32> = to_parent.iter().map(|&x| x as u32).collect();
        let data = (0..copies)
            .map(|_| (g.clone(), emb.clone(), false))
            .collect();
        AmalgamSpec::new(h_group, data)
    }

    /// Decompose the graph-of-groups double over `graph` with vertex group
    /// `G` and edge group `H`: one copy of `G` per vertex (factor ids follow
    /// ascending vertex-id order) and one `H × Z` factor per non-tree edge
    /// (ids after all vertices, in input edge order). Tree edges contribute
    /// no factor — their amalgamation is the common `H` identification.
    pub fn decompose_graph(
        graph: &GraphSpec,
        g: &FiniteGroup,
        h: &Subgroup,
    ) -> Result<Self, AmalgamError> {
        h.check_parent(g)?;
        let tree = graph.spanning_tree()?;
        let (h_group, to_parent) = h.as_group(g)?;
        let emb: Vec<u32> = to_parent.iter().map(|&x| x as u32).collect();
        let identity_emb: Vec<u32> = (0..h_group.order() as u32).collect();
        let mut data: Vec<(FiniteGroup, Vec<u32>, bool)> = Vec::new();
        for _ in 0..graph.vertices.len() {
            data.push((g.clone(), emb.clone(), false));
        }
        for (e, _) in graph.edges.iter().enumerate() {
            if !tree[e] {
                data.push((h_group.clone(), identity_emb.clone(), true));
            }
        }
        let mut spec = AmalgamSpec::new(h_group, data)?;
        spec.provenance = Some(graph.clone());
        Ok(spec)
    }

    pub fn common(&self) -> &FiniteGroup {
        &self.common
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, f: usize) -> Result<&Factor, AmalgamError> {
        self.factors
            .get(f)
            .ok_or(AmalgamError::FactorOutOfRange(f, self.factors.len()))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn check_letter(&self, l: &Letter) -> Result<(), AmalgamError> {
        self.factor(l.factor)?.check_elem(&l.value)
    }

    /// Prepend one raw letter to a canonical suffix, keeping it canonical.
    fn push_left(
        &self,
        f: usize,
        value: &FactorElem,
        head: &mut usize,
        letters: &mut Vec<Letter>,
    ) {
        let fac = &self.factors[f];
        let mut v = fac.mul_elem(value, &fac.embed_h(*head));
        if let Some(first) = letters.first() {
            if first.factor == f {
                v = fac.mul_elem(&v, &first.value);
                letters.remove(0);
            }
        }
        let (h, rep) = fac.decompose(&v);
        *head = h;
        if !fac.rep_is_trivial(&rep) {
            letters.insert(0, Letter { factor: f, value: rep });
        }
    }

    /// Canonical form of a raw word. Idempotent; the empty word maps to the
    /// identity form.
    pub fn normalize(&self, word: &[Letter]) -> Result<NormalForm, AmalgamError> {
        for l in word {
            self.check_letter(l)?;
        }
        let mut head = 0usize;
        let mut letters = Vec::new();
        for l in word.iter().rev() {
            self.push_left(l.factor, &l.value, &mut head, &mut letters);
        }
        Ok(NormalForm { head, letters })
    }

    /// Canonical form of `embed(head) · word`.
    pub fn normalize_with_head(
        &self,
        head: usize,
        word: &[Letter],
    ) -> Result<NormalForm, AmalgamError> {
        let nf = self.normalize(word)?;
        Ok(NormalForm {
            head: self.common.mul(head, nf.head),
            letters: nf.letters,
        })
    }

    /// Product of two canonical forms (inputs need not be canonical; they
    /// are re-normalized on the way through).
    pub fn multiply(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm, AmalgamError> {
        self.common.check_index(a.head)?;
        self.common.check_index(b.head)?;
        for l in a.letters.iter().chain(&b.letters) {
            self.check_letter(l)?;
        }
        let mut head = b.head;
        let mut letters = b.letters.clone();
        for l in a.letters.iter().rev() {
            self.push_left(l.factor, &l.value, &mut head, &mut letters);
        }
        Ok(NormalForm {
            head: self.common.mul(a.head, head),
            letters,
        })
    }

    /// Inverse of a canonical form.
    pub fn invert(&self, a: &NormalForm) -> Result<NormalForm, AmalgamError> {
        self.common.check_index(a.head)?;
        for l in &a.letters {
            self.check_letter(l)?;
        }
        let mut head = self.common.inv(a.head);
        let mut letters = Vec::new();
        for l in &a.letters {
            let fac = &self.factors[l.factor];
            let inv = fac.inv_elem(&l.value);
            self.push_left(l.factor, &inv, &mut head, &mut letters);
        }
        Ok(NormalForm { head, letters })
    }

    /// Left-multiply a canonical form by a single letter.
    pub fn left_mul_letter(
        &self,
        l: &Letter,
        x: &NormalForm,
    ) -> Result<NormalForm, AmalgamError> {
        self.check_letter(l)?;
        let mut head = x.head;
        let mut letters = x.letters.clone();
        self.push_left(l.factor, &l.value, &mut head, &mut letters);
        Ok(NormalForm { head, letters })
    }

    /// Structural canonical-form predicate: every letter is a non-identity
    /// transversal representative and adjacent letters lie in distinct
    /// factors.
    pub fn is_canonical(&self, nf: &NormalForm) -> bool {
        if nf.head >= self.common.order() {
            return false;
        }
        for (i, l) in nf.letters.iter().enumerate() {
            let Ok(fac) = self.factor(l.factor) else {
                return false;
            };
            if fac.check_elem(&l.value).is_err() || !fac.is_canonical_value(&l.value) {
                return false;
            }
            if i > 0 && nf.letters[i - 1].factor == l.factor {
                return false;
            }
        }
        true
    }

    /// The default generating alphabet: all non-identity elements of each
    /// plain finite factor, plus `(identity, ±1)` of each `Z`-extended
    /// factor.
    pub fn default_alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (f, fac) in self.factors.iter().enumerate() {
            if fac.z_extended {
                out.push(Letter::shifted(f, 0, 1));
                out.push(Letter::shifted(f, 0, -1));
            } else {
                for v in 1..fac.group.order() {
                    out.push(Letter::finite(f, v));
                }
            }
        }
        out
    }

    /// Close an alphabet under factor inverses (missing inverses are
    /// appended in scan order).
    pub fn close_alphabet(&self, letters: &[Letter]) -> Result<Vec<Letter>, AmalgamError> {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            self.check_letter(l)?;
            if !out.contains(l) {
                out.push(l.clone());
            }
        }
        let mut i = 0;
        while i < out.len() {
            let l = &out[i];
            let inv = Letter {
                factor: l.factor,
                value: self.factors[l.factor].inv_elem(&l.value),
            };
            if !out.contains(&inv) {
                out.push(inv);
            }
            i += 1;
        }
        Ok(out)
    }

    /// All distinct canonical forms of words of length ≤ `radius` over the
    /// alphabet (closed under inverses first). Deterministic breadth-first
    /// order: the identity is element 0 and elements are grouped by word
    /// length.
    pub fn ball(
        &self,
        alphabet: &[Letter],
        radius: usize,
        caps: &Caps,
    ) -> Result<Ball, AmalgamError> {
        let alphabet = self.close_alphabet(alphabet)?;
        let mut elements = vec![NormalForm::identity()];
        let mut index: HashMap<NormalForm, usize> = HashMap::new();
        index.insert(NormalForm::identity(), 0);
        let mut offsets = vec![1usize];
        let mut level_start = 0;
        for _ in 0..radius {
            let level_end = elements.len();
            if level_start == level_end {
                offsets.push(elements.len());
                level_start = level_end;
                continue;
            }
            let frontier = &elements[level_start..level_end];
            let children: Vec<Vec<NormalForm>> = crate::exec::map_collect(frontier, |x| {
                alphabet
                    .iter()
                    .map(|l| {
                        self.left_mul_letter(l, x)
                            .expect("alphabet letters validated by close_alphabet")
                    })
                    .collect()
            });
            for batch in children {
                for nf in batch {
                    if !index.contains_key(&nf) {
                        if elements.len() >= caps.max_ball {
                            return Err(AmalgamError::BallTooLarge(caps.max_ball));
                        }
                        index.insert(nf.clone(), elements.len());
                        elements.push(nf);
                    }
                }
            }
            level_start = level_end;
            offsets.push(elements.len());
        }
        Ok(Ball { elements, offsets })
    }
}

/// A ball of canonical forms, grouped by word length.
#[derive(Debug, Clone)]
pub struct Ball {
    elements: Vec<NormalForm>,
    /// `offsets[r]` is the number of elements of word length ≤ `r`.
    offsets: Vec<usize>,
}

impl Ball {
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn radius(&self) -> usize {
        self.offsets.len() - 1
    }

    /// The sub-ball of radius `r` (a prefix, by breadth-first construction).
    pub fn radius_prefix(&self, r: usize) -> &[NormalForm] {
        &self.elements[..self.offsets[r.min(self.offsets.len() - 1)]]
    }
}

// ---------------------------------------------------------------------------
// serialization: letters as [factor, value], shifted values as [g, "m"]
// ---------------------------------------------------------------------------

impl Serialize for FactorElem {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            FactorElem::Finite(g) => ser.serialize_u64(*g as u64),
            FactorElem::Shifted(g, m) => (g, m.to_str_radix(10)).serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for FactorElem {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(u64),
            Shifted(usize, String),
        }
        match Raw::deserialize(de)? {
            Raw::Finite(g) => Ok(FactorElem::Finite(g as usize)),
            Raw::Shifted(g, m) => {
                let m = m
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad exponent {m:?}: {e}")))?;
                Ok(FactorElem::Shifted(g, m))
            }
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        (self.factor, &self.value).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let (factor, value) = <(usize, FactorElem)>::deserialize(de)?;
        Ok(Letter { factor, value })
    }
}

/// Reduce a shifted exponent modulo `n` into `0..n`.
pub(crate) fn mod_exponent(m: &BigInt, n: usize) -> usize {
    let n_big = BigInt::from(n);
    let r = m.mod_floor(&n_big);
    debug_assert!(!r.is_negative());
    usize::try_from(r).expect("mod_floor result fits in usize")
}

#[cfg(test)]
mod tests;
