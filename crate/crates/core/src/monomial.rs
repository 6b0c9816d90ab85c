//! Monomials, finite order ideals and monomial ideals.
//!
//! A monomial over `m` variables is stored by its exponent vector. Order
//! ideals are kept in canonical order (degree first, then reverse
//! lexicographic with `x_1 > x_2 > ... > x_m`), which is also the order used
//! when serialising them.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("exponent vector has length {found}, expected {expected}")]
    BadArity { expected: usize, found: usize },
    #[error("order ideal must contain at least one variable")]
    NoVariables,
    #[error("the monomial 1 is missing")]
    Missing1,
    #[error("variable x{0} is missing")]
    MissingVariable(usize),
    #[error("divisor {divisor} of {monomial} is missing")]
    MissingDivisor { monomial: Monomial, divisor: Monomial },
    #[error("order ideal is not shifted: {monomial} is present but {shifted} is not")]
    NotShifted { monomial: Monomial, shifted: Monomial },
    #[error("ideal is not Artinian: no pure power of x{0} among the generators")]
    NotArtinian(usize),
    #[error("complement violates the order-ideal convention: {0} is not a standard monomial")]
    ConventionViolation(Monomial),
    #[error("enumeration budget of {0} instances exhausted")]
    CapExceeded(usize),
}

/// A monomial `x_1^{e_1} ... x_m^{e_m}`, variables indexed from 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(m: usize) -> Self {
        Monomial { exponents: vec![0; m] }
    }

    /// The variable `x_i` (1-based) in `m` variables.
    pub fn var(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= m, "variable index {i} outside 1..={m}");
        let mut exponents = vec![0; m];
        exponents[i - 1] = 1;
        Monomial { exponents }
    }

    /// Builds `x_{i_1} ... x_{i_s}` from a list of 1-based indices (repeats allowed).
    pub fn from_indices(m: usize, indices: &[usize]) -> Self {
        let mut exponents = vec![0; m];
        for &i in indices {
            assert!(i >= 1 && i <= m, "variable index {i} outside 1..={m}");
            exponents[i - 1] += 1;
        }
        Monomial { exponents }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_i`, 1-based; zero beyond the arity.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Sorted index multiset `i_1 <= ... <= i_s`.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for (k, &e) in self.exponents.iter().enumerate() {
            out.extend(std::iter::repeat_n(k + 1, e as usize));
        }
        out
    }

    /// Largest index of a variable dividing the monomial, `0` for the monomial 1.
    pub fn max_index(&self) -> usize {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |p| p + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Support as sorted 1-based indices.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// `self | other`, comparing over the longer arity.
    pub fn divides(&self, other: &Monomial) -> bool {
        let n = self.nvars().max(other.nvars());
        (1..=n).all(|i| self.exponent(i) <= other.exponent(i))
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i - 1] += 1;
        Monomial { exponents }
    }

    pub fn times_var_pow(&self, i: usize, k: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i - 1] += k;
        Monomial { exponents }
    }

    /// `self / x_i` when `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[i - 1] -= 1;
        Some(Monomial { exponents })
    }

    /// Replace one factor `x_i` by `x_j`.
    pub fn replace_var(&self, i: usize, j: usize) -> Option<Monomial> {
        let mut out = self.div_var(i)?;
        if j > out.nvars() {
            return None;
        }
        out.exponents[j - 1] += 1;
        Some(out)
    }

    /// The same monomial viewed in `n >= nvars` variables.
    pub fn padded(&self, n: usize) -> Monomial {
        assert!(n >= self.max_index(), "cannot embed {self} into {n} variables");
        let mut exponents = self.exponents.clone();
        exponents.resize(n, 0);
        Monomial { exponents }
    }

    /// Componentwise dominance of sorted index tuples: `self` is shift-generated by `other`.
    pub fn is_shift_of(&self, other: &Monomial) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        self.indices()
            .iter()
            .zip(other.indices().iter())
            .all(|(a, b)| a >= b)
    }

    /// Immediate shift moves `x_i -> x_{i+1}`.
    pub fn up_moves(&self) -> Vec<Monomial> {
        let m = self.nvars();
        (1..m)
            .filter(|&i| self.exponent(i) > 0)
            .filter_map(|i| self.replace_var(i, i + 1))
            .collect()
    }

    /// Immediate shift moves `x_i -> x_{i-1}`.
    pub fn down_moves(&self) -> Vec<Monomial> {
        (2..=self.nvars())
            .filter(|&i| self.exponent(i) > 0)
            .filter_map(|i| self.replace_var(i, i - 1))
            .collect()
    }
}

impl Ord for Monomial {
    /// Degree first, then reverse lexicographic (`x_1 > x_2 > ... > x_m`), ascending.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                let n = self.nvars().max(other.nvars());
                for i in (1..=n).rev() {
                    match self.exponent(i).cmp(&other.exponent(i)) {
                        Ordering::Equal => continue,
                        // more weight on later variables means smaller in revlex
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.nvars().cmp(&other.nvars()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of degree exactly `k` in `m` variables, canonical order.
pub fn monomials_of_degree(m: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if current.len() == k {
            out.push(Monomial::from_indices(m, current));
            return;
        }
        for i in start..=m {
            current.push(i);
            rec(m, k, i, current, out);
            current.pop();
        }
    }
    rec(m, k, 1, &mut current, &mut out);
    out.sort();
    out
}

/// A finite divisor-closed set of monomials containing `1, x_1, ..., x_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderIdeal {
    m: usize,
    monomials: BTreeSet<Monomial>,
}

impl OrderIdeal {
    /// Validates divisor closure and the convention `1, x_1, ..., x_m ∈ U`.
    pub fn new<I>(m: usize, monomials: I) -> Result<Self, MonomialError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if m == 0 {
            return Err(MonomialError::NoVariables);
        }
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        if let Some(bad) = set.iter().find(|u| u.nvars() != m) {
            return Err(MonomialError::BadArity { expected: m, found: bad.nvars() });
        }
        if !set.contains(&Monomial::one(m)) {
            return Err(MonomialError::Missing1);
        }
        if let Some(i) = (1..=m).find(|&i| !set.contains(&Monomial::var(m, i))) {
            return Err(MonomialError::MissingVariable(i));
        }
        for u in &set {
            for i in u.support() {
                let divisor = u.div_var(i).expect("support index divides");
                if !set.contains(&divisor) {
                    return Err(MonomialError::MissingDivisor { monomial: u.clone(), divisor });
                }
            }
        }
        Ok(OrderIdeal { m, monomials: set })
    }

    /// Caller guarantees validity.
    pub(crate) fn from_valid(m: usize, monomials: BTreeSet<Monomial>) -> Self {
        debug_assert!(OrderIdeal::new(m, monomials.iter().cloned()).is_ok());
        OrderIdeal { m, monomials }
    }

    /// All monomials of degree at most `d` in `m` variables.
    pub fn maximal(m: usize, d: usize) -> Self {
        assert!(m >= 1 && d >= 1);
        let monomials = (0..=d).flat_map(|k| monomials_of_degree(m, k)).collect();
        OrderIdeal { m, monomials }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.monomials.contains(u)
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn d_max(&self) -> usize {
        self.monomials.iter().next_back().map_or(0, Monomial::degree)
    }

    /// `[U]_k`.
    pub fn layer(&self, k: usize) -> Vec<&Monomial> {
        self.monomials.iter().filter(|u| u.degree() == k).collect()
    }

    /// Degree histogram `(#[U]_0, ..., #[U]_{d_max})`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.d_max() + 1];
        for u in &self.monomials {
            h[u.degree()] += 1;
        }
        h
    }

    /// First witness against shiftedness, if any.
    pub fn shift_violation(&self) -> Option<(Monomial, Monomial)> {
        self.monomials.iter().find_map(|u| {
            u.up_moves()
                .into_iter()
                .find(|v| !self.contains(v))
                .map(|v| (u.clone(), v))
        })
    }

    pub fn is_shifted(&self) -> bool {
        self.shift_violation().is_none()
    }

    pub fn require_shifted(&self) -> Result<(), MonomialError> {
        match self.shift_violation() {
            None => Ok(()),
            Some((monomial, shifted)) => Err(MonomialError::NotShifted { monomial, shifted }),
        }
    }

    /// Minimal generators of `I(U)`, the ideal generated by `Mon(m) \ U`.
    pub fn ideal(&self) -> MonomialIdeal {
        let mut minimal = BTreeSet::new();
        for u in &self.monomials {
            for i in 1..=self.m {
                let w = u.times_var(i);
                if self.contains(&w) {
                    continue;
                }
                if w.support().iter().all(|&j| self.contains(&w.div_var(j).unwrap())) {
                    minimal.insert(w);
                }
            }
        }
        MonomialIdeal { nvars: self.m, generators: minimal.into_iter().collect() }
    }

    /// `G_s(U)`: per-degree minimal members under sorted-index dominance.
    pub fn shift_generators(&self) -> Result<Vec<Monomial>, MonomialError> {
        self.require_shifted()?;
        let mut out = Vec::new();
        for k in 0..=self.d_max() {
            let layer = self.layer(k);
            for u in &layer {
                let dominated = layer.iter().any(|v| v != u && u.is_shift_of(v));
                if !dominated {
                    out.push((*u).clone());
                }
            }
        }
        Ok(out)
    }

    /// `Û`: members not divisible by `x_1`.
    pub fn without_first_variable(&self) -> Vec<Monomial> {
        self.monomials.iter().filter(|u| u.exponent(1) == 0).cloned().collect()
    }

    /// `Ũ = { u ∈ U : x_1 u ∈ U }`.
    pub fn first_variable_quotient(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .filter(|u| self.contains(&u.times_var(1)))
            .cloned()
            .collect()
    }
}

/// A monomial ideal stored by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in `nvars` variables; non-minimal generators are dropped.
    pub fn generated_by<I>(nvars: usize, gens: I) -> Result<Self, MonomialError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let set: BTreeSet<Monomial> = gens.into_iter().collect();
        if let Some(bad) = set.iter().find(|u| u.nvars() != nvars) {
            return Err(MonomialError::BadArity { expected: nvars, found: bad.nvars() });
        }
        Ok(MonomialIdeal { nvars, generators: minimalize(set) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn d_max(&self) -> usize {
        self.generators.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `max(I)`: largest variable index among the generators.
    pub fn max_index(&self) -> usize {
        self.generators.iter().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Extension `I · P(n)` for `n >= nvars`.
    pub fn extended(&self, n: usize) -> MonomialIdeal {
        assert!(n >= self.max_index());
        MonomialIdeal {
            nvars: n,
            generators: self.generators.iter().map(|g| g.padded(n)).collect(),
        }
    }

    /// Strong stability, checked on the minimal generators.
    pub fn is_strongly_stable(&self) -> bool {
        self.generators
            .iter()
            .all(|u| u.support().into_iter().all(|i| {
                (1..i).all(|j| self.contains(&u.replace_var(i, j).unwrap()))
            }))
    }

    /// `U(I) = Mon(m) \ I` for an Artinian ideal in `m = nvars` variables.
    pub fn complement(&self) -> Result<OrderIdeal, MonomialError> {
        let m = self.nvars;
        if m == 0 {
            return Err(MonomialError::NoVariables);
        }
        for i in 1..=m {
            let has_power = self.generators.iter().any(|g| g.support() == [i]);
            if !has_power {
                return Err(MonomialError::NotArtinian(i));
            }
        }
        let one = Monomial::one(m);
        if self.contains(&one) {
            return Err(MonomialError::ConventionViolation(one));
        }
        if let Some(i) = (1..=m).find(|&i| self.contains(&Monomial::var(m, i))) {
            return Err(MonomialError::ConventionViolation(Monomial::var(m, i)));
        }
        // standard monomials form an order ideal, so growing layer by layer reaches all of them
        let mut standard = BTreeSet::new();
        let mut frontier = vec![one];
        while !frontier.is_empty() {
            let mut next = HashSet::new();
            for u in frontier {
                for i in 1..=m {
                    let w = u.times_var(i);
                    if !self.contains(&w) && !standard.contains(&w) {
                        next.insert(w);
                    }
                }
                standard.insert(u);
            }
            frontier = next.into_iter().collect();
        }
        Ok(OrderIdeal::from_valid(m, standard))
    }
}

fn minimalize(set: BTreeSet<Monomial>) -> Vec<Monomial> {
    // canonical order is degree-first, so divisors precede their multiples
    let mut out: Vec<Monomial> = Vec::with_capacity(set.len());
    for u in set {
        if !out.iter().any(|g| g.divides(&u)) {
            out.push(u);
        }
    }
    out
}

/// Options for [`ShiftedIdeals`].
#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub m: usize,
    pub d_cap: usize,
    /// Keep only ideals with exactly this degree histogram.
    pub h_filter: Option<Vec<usize>>,
    /// Maximum number of ideals to emit before failing with `CapExceeded`.
    pub budget: Option<usize>,
}

impl EnumerationConfig {
    pub fn new(m: usize, d_cap: usize) -> Self {
        EnumerationConfig { m, d_cap, h_filter: None, budget: None }
    }

    pub fn with_h(mut self, h: Vec<usize>) -> Self {
        self.h_filter = Some(h);
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// Every shifted order ideal of `P(m)` with `1 <= d_max <= d_cap`, each exactly once.
///
/// Ideals are built degree by degree. Each degree-`k` layer is a shift-closed
/// subset of the monomials whose divisors all lie in layer `k-1`; layers are
/// branched over in a fixed order, so the stream is deterministic.
pub struct ShiftedIdeals {
    config: EnumerationConfig,
    layers: Vec<Vec<Monomial>>,
    stack: Vec<Frame>,
    emitted: usize,
    done: bool,
}

struct Frame {
    degree: usize,
    options: Vec<Vec<Monomial>>,
    next: usize,
}

pub fn enumerate_shifted_order_ideals(config: EnumerationConfig) -> ShiftedIdeals {
    ShiftedIdeals::new(config)
}

/// Collects the whole stream, failing on budget exhaustion.
pub fn collect_shifted_order_ideals(config: EnumerationConfig) -> Result<Vec<OrderIdeal>, MonomialError> {
    ShiftedIdeals::new(config).collect()
}

impl ShiftedIdeals {
    pub fn new(config: EnumerationConfig) -> Self {
        assert!(config.m >= 1 && config.d_cap >= 1, "need m >= 1 and d_cap >= 1");
        let m = config.m;
        let mut it = ShiftedIdeals { config, layers: Vec::new(), stack: Vec::new(), emitted: 0, done: false };
        let admissible = match &it.config.h_filter {
            Some(h) => {
                h.len() >= 2
                    && h[0] == 1
                    && h[1] == m
                    && h.len() - 1 <= it.config.d_cap
                    && h.iter().all(|&x| x > 0)
            }
            None => true,
        };
        if !admissible {
            it.done = true;
            return it;
        }
        let vars: Vec<Monomial> = (1..=m).rev().map(|i| Monomial::var(m, i)).collect();
        it.layers.push(vec![Monomial::one(m)]);
        it.layers.push(vars);
        let frame = it.frame_for(2);
        it.stack.push(frame);
        it
    }

    fn target_size(&self, degree: usize) -> Option<usize> {
        match &self.config.h_filter {
            Some(h) => Some(h.get(degree).copied().unwrap_or(0)),
            None if degree > self.config.d_cap => Some(0),
            None => None,
        }
    }

    fn frame_for(&self, degree: usize) -> Frame {
        let options = match self.target_size(degree) {
            Some(0) => vec![Vec::new()],
            target => {
                let prev = self.layers.last().expect("previous layer");
                let allowed = admissible_layer(self.config.m, prev);
                let mut options = shift_closed_subsets(&allowed);
                if let Some(size) = target {
                    options.retain(|o| o.len() == size);
                }
                options
            }
        };
        Frame { degree, options, next: 0 }
    }

    fn assemble(&self, last: Option<&[Monomial]>) -> OrderIdeal {
        let set: BTreeSet<Monomial> = self
            .layers
            .iter()
            .flatten()
            .chain(last.into_iter().flatten())
            .cloned()
            .collect();
        OrderIdeal::from_valid(self.config.m, set)
    }
}

impl Iterator for ShiftedIdeals {
    type Item = Result<OrderIdeal, MonomialError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if top.next >= top.options.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.layers.pop();
                }
                continue;
            }
            let choice = std::mem::take(&mut top.options[top.next]);
            top.next += 1;
            let degree = top.degree;
            if choice.is_empty() {
                if let Some(budget) = self.config.budget {
                    if self.emitted >= budget {
                        self.done = true;
                        return Some(Err(MonomialError::CapExceeded(budget)));
                    }
                }
                self.emitted += 1;
                return Some(Ok(self.assemble(None)));
            }
            self.layers.push(choice);
            let frame = self.frame_for(degree + 1);
            self.stack.push(frame);
        }
    }
}

/// Degree-`k+1` monomials all of whose divisors lie in `prev`, in descending
/// lexicographic order of sorted index tuples (shift-larger elements first).
fn admissible_layer(m: usize, prev: &[Monomial]) -> Vec<Monomial> {
    let prev_set: HashSet<&Monomial> = prev.iter().collect();
    let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
    for u in prev {
        for i in 1..=m {
            let w = u.times_var(i);
            if w.support().iter().all(|&j| prev_set.contains(&w.div_var(j).unwrap())) {
                candidates.insert(w.indices());
            }
        }
    }
    candidates
        .into_iter()
        .rev()
        .map(|idx| Monomial::from_indices(m, &idx))
        .collect()
}

/// All subsets of `allowed` closed under up-moves, exclusion branch first.
fn shift_closed_subsets(allowed: &[Monomial]) -> Vec<Vec<Monomial>> {
    fn rec(
        allowed: &[Monomial],
        pos: usize,
        chosen: &mut Vec<Monomial>,
        chosen_set: &mut HashSet<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        if pos == allowed.len() {
            let mut layer = chosen.clone();
            layer.sort();
            out.push(layer);
            return;
        }
        rec(allowed, pos + 1, chosen, chosen_set, out);
        let u = &allowed[pos];
        if u.up_moves().iter().all(|v| chosen_set.contains(v)) {
            chosen.push(u.clone());
            chosen_set.insert(u.clone());
            rec(allowed, pos + 1, chosen, chosen_set, out);
            chosen_set.remove(u);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    rec(allowed, 0, &mut Vec::new(), &mut HashSet::new(), &mut out);
    out
}

/// `U^{(ℓ)}`: all monomials of degree at most `ℓ` together with all squarefree monomials.
pub fn squarefree_extended_ideal(m: usize, level: usize) -> OrderIdeal {
    let mut set: BTreeSet<Monomial> = (0..=level).flat_map(|k| monomials_of_degree(m, k)).collect();
    for mask in 0u64..(1u64 << m) {
        let exps = (0..m).map(|k| ((mask >> k) & 1) as u32).collect();
        set.insert(Monomial::new(exps));
    }
    OrderIdeal::from_valid(m, set)
}
