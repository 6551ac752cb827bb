//! Classical matrix Lie algebras sl_n, so_2l+1, sp_2l, so_2l in their split
//! anti-diagonal realizations, together with the Borel / nilradical / Cartan
//! subalgebras and the square-zero corner subalgebra w.
//!
//! Every algebra is a list of integer basis matrices inside gl_n. Basis order
//! is fixed by scanning the n x n grid row-major and emitting one basis
//! element per free parameter of the defining block conditions, so all
//! downstream variable namings are reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SpanSolver};
use crate::{rat, QMatrix, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Input(format!("unknown family {other:?}"))),
        }
    }
}

/// A classical type: family plus rank, with the derived embedding size and
/// Coxeter number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::C => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 3,
        };
        if !ok {
            return Err(Error::Input(format!(
                "rank {rank} is invalid for family {}",
                family.letter()
            )));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the natural matrix embedding.
    pub fn n(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C => 2 * self.rank,
            Family::D => 2 * self.rank - 2,
        }
    }

    pub fn dim(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => (l + 1) * (l + 1) - 1,
            Family::B | Family::C => 2 * l * l + l,
            Family::D => 2 * l * l - l,
        }
    }

    /// Dimension of the nilradical u (strictly upper triangular part).
    pub fn dim_u(&self) -> usize {
        (self.dim() - self.rank) / 2
    }

    /// Dimension of the square-zero corner subalgebra w.
    pub fn dim_w(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => {
                let n = self.n();
                (n / 2) * n.div_ceil(2)
            }
            Family::C => (l * l + l) / 2,
            Family::B | Family::D => (l * l - l) / 2,
        }
    }

    pub fn dim_nilpotent_cone(&self) -> usize {
        self.dim() - self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// Conventional matrix-algebra name, e.g. "sl4" or "sp4".
    pub fn algebra_name(&self) -> String {
        match self.family {
            Family::A => format!("sl{}", self.n()),
            Family::B | Family::D => format!("so{}", self.n()),
            Family::C => format!("sp{}", self.n()),
        }
    }
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    /// Accepts "C2"-style family+rank names and "sl3"/"sp4"/"so7"-style
    /// algebra names.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        let parse_num = |t: &str| -> Result<usize> {
            t.parse::<usize>()
                .map_err(|_| Error::Input(format!("cannot parse algebra {s:?}")))
        };
        if let Some(rest) = lower.strip_prefix("sl") {
            let n = parse_num(rest)?;
            if n < 2 {
                return Err(Error::Input(format!("sl{n} is not simple")));
            }
            return LieType::new(Family::A, n - 1);
        }
        if let Some(rest) = lower.strip_prefix("sp") {
            let n = parse_num(rest)?;
            if n % 2 != 0 || n == 0 {
                return Err(Error::Input(format!("sp{n} needs even positive size")));
            }
            return LieType::new(Family::C, n / 2);
        }
        if let Some(rest) = lower.strip_prefix("so") {
            let n = parse_num(rest)?;
            if n % 2 == 0 {
                return LieType::new(Family::D, n / 2);
            }
            return LieType::new(Family::B, n / 2);
        }
        let mut chars = s.chars();
        let fam: Family = chars
            .next()
            .ok_or_else(|| Error::Input("empty algebra name".into()))?
            .to_string()
            .parse()?;
        let rank = parse_num(chars.as_str())?;
        LieType::new(fam, rank)
    }
}

/// Grid position of the free parameter a basis element was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeParam {
    pub row: usize,
    pub col: usize,
}

/// A classical Lie algebra with an explicit integer matrix basis.
#[derive(Debug, Clone)]
pub struct LieAlgebraBasis {
    lie_type: LieType,
    basis: Vec<QMatrix>,
    params: Vec<FreeParam>,
    form: Option<QMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubalgebraTag {
    /// b: upper triangular members.
    Borel,
    /// u: strictly upper triangular members.
    Nilradical,
    /// t: diagonal members.
    Cartan,
    /// w: the abelian square-zero corner block.
    SquareZero,
}

#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub tag: SubalgebraTag,
    pub lie_type: LieType,
    pub basis: Vec<QMatrix>,
    /// Indices into the parent basis.
    pub parent_indices: Vec<usize>,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// How a grid position relates to the free parameters of the block
/// conditions.
enum Slot {
    /// Free parameter; setting it to 1 forces the listed entries.
    Free(Vec<(usize, usize, i64)>),
    /// Forced by an earlier free parameter, or identically zero.
    Dependent,
}

fn classify_a(n: usize, i: usize, j: usize) -> Slot {
    if i == n - 1 && j == n - 1 {
        // last diagonal entry balances the trace
        Slot::Dependent
    } else if i == j {
        Slot::Free(vec![(i, j, 1), (n - 1, n - 1, -1)])
    } else {
        Slot::Free(vec![(i, j, 1)])
    }
}

/// Types C and D: blocks [[m11, m12], [m21, m22]] with m22 = -m11^J and
/// m12, m21 symmetric (C, eps = 1) or skew (D, eps = -1) over the
/// anti-diagonal of the block.
fn classify_cd(l: usize, eps: i64, i: usize, j: usize) -> Slot {
    let n = 2 * l;
    if i < l && j < l {
        Slot::Free(vec![(i, j, 1), (n - 1 - j, n - 1 - i, -1)])
    } else if i < l && j >= l {
        let (bi, bj) = (i, j - l);
        let (pi, pj) = (l - 1 - bj, l - 1 - bi);
        if (bi, bj) == (pi, pj) {
            if eps == 1 {
                Slot::Free(vec![(i, j, 1)])
            } else {
                Slot::Dependent // skew forces anti-diagonal entries to zero
            }
        } else if (bi, bj) < (pi, pj) {
            Slot::Free(vec![(i, j, 1), (pi, pj + l, eps)])
        } else {
            Slot::Dependent
        }
    } else if i >= l && j < l {
        let (bi, bj) = (i - l, j);
        let (pi, pj) = (l - 1 - bj, l - 1 - bi);
        if (bi, bj) == (pi, pj) {
            if eps == 1 {
                Slot::Free(vec![(i, j, 1)])
            } else {
                Slot::Dependent
            }
        } else if (bi, bj) < (pi, pj) {
            Slot::Free(vec![(i, j, 1), (pi + l, pj, eps)])
        } else {
            Slot::Dependent
        }
    } else {
        Slot::Dependent // m22 forced by m11
    }
}

/// Type B: blocks [[m11, b1, m12], [c1, 0, c2], [m21, b2, m22]] with
/// m22 = -m11^J, m12/m21 skew over the anti-diagonal, J b1 = -c2^t and
/// J b2 = -c1^t.
fn classify_b(l: usize, i: usize, j: usize) -> Slot {
    let mid = l;
    let n = 2 * l + 1;
    let region = |k: usize| {
        if k < l {
            0
        } else if k == mid {
            1
        } else {
            2
        }
    };
    match (region(i), region(j)) {
        (0, 0) => Slot::Free(vec![(i, j, 1), (n - 1 - j, n - 1 - i, -1)]),
        (0, 1) => Slot::Free(vec![(i, mid, 1), (mid, 2 * l - i, -1)]),
        (1, 0) => Slot::Free(vec![(mid, j, 1), (2 * l - j, mid, -1)]),
        (0, 2) => {
            let (bi, bj) = (i, j - l - 1);
            let (pi, pj) = (l - 1 - bj, l - 1 - bi);
            if (bi, bj) < (pi, pj) {
                Slot::Free(vec![(i, j, 1), (pi, pj + l + 1, -1)])
            } else {
                Slot::Dependent
            }
        }
        (2, 0) => {
            let (bi, bj) = (i - l - 1, j);
            let (pi, pj) = (l - 1 - bj, l - 1 - bi);
            if (bi, bj) < (pi, pj) {
                Slot::Free(vec![(i, j, 1), (pi + l + 1, pj, -1)])
            } else {
                Slot::Dependent
            }
        }
        _ => Slot::Dependent,
    }
}

/// The defining bilinear form: anti-diagonal blocks built from J_l.
fn build_form(t: LieType) -> Option<QMatrix> {
    let l = t.rank();
    let n = t.n();
    match t.family() {
        Family::A => None,
        Family::C => Some(Matrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                if i < l {
                    rat(1)
                } else {
                    rat(-1)
                }
            } else {
                rat(0)
            }
        })),
        Family::B | Family::D => Some(Matrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                rat(1)
            } else {
                rat(0)
            }
        })),
    }
}

/// Build the algebra: one basis matrix per free parameter, scanned row-major.
pub fn construct_algebra(lie_type: LieType) -> LieAlgebraBasis {
    let n = lie_type.n();
    let l = lie_type.rank();
    let mut basis = Vec::new();
    let mut params = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let slot = match lie_type.family() {
                Family::A => classify_a(n, i, j),
                Family::C => classify_cd(l, 1, i, j),
                Family::D => classify_cd(l, -1, i, j),
                Family::B => classify_b(l, i, j),
            };
            if let Slot::Free(entries) = slot {
                let mut m = Matrix::zero(n, n);
                for (r, c, v) in entries {
                    m.set(r, c, rat(v));
                }
                basis.push(m);
                params.push(FreeParam { row: i, col: j });
            }
        }
    }
    let g = LieAlgebraBasis {
        lie_type,
        basis,
        params,
        form: build_form(lie_type),
    };
    debug_assert_eq!(g.dim(), lie_type.dim());
    g
}

impl LieAlgebraBasis {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn params(&self) -> &[FreeParam] {
        &self.params
    }

    pub fn form(&self) -> Option<&QMatrix> {
        self.form.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.lie_type.n()
    }

    /// Membership condition of the defining realization: trace zero for type
    /// A, x^t F + F x = 0 otherwise.
    pub fn is_member(&self, x: &QMatrix) -> bool {
        match &self.form {
            None => x.trace() == Rat::from_integer(0.into()),
            Some(f) => x.transpose().mul(f).add(&f.mul(x)).is_zero(),
        }
    }

    /// Span membership of an explicit matrix.
    pub fn contains(&self, x: &QMatrix) -> bool {
        let mut span = SpanSolver::new(self.n() * self.n());
        for b in &self.basis {
            span.insert(&b.flatten());
        }
        span.contains(&x.flatten())
    }

    /// Element of the algebra from basis coordinates.
    pub fn from_coords(&self, coords: &[Rat]) -> QMatrix {
        assert_eq!(coords.len(), self.dim());
        let n = self.n();
        let mut m = Matrix::zero(n, n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !num_traits::Zero::is_zero(c) {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    /// Check bracket closure exactly: every [b_i, b_j] must be an exact
    /// linear combination of the basis with zero residual.
    pub fn bracket_closure_holds(&self) -> bool {
        let nn = self.n() * self.n();
        let mut span = SpanSolver::new(nn);
        for b in &self.basis {
            span.insert(&b.flatten());
        }
        for (i, x) in self.basis.iter().enumerate() {
            for y in &self.basis[i + 1..] {
                let br = x.bracket(y).expect("same-size basis matrices");
                let Some(coeffs) = span.solve(&br.flatten()) else {
                    return false;
                };
                let residual = br.sub(&self.from_coords(&coeffs));
                if !residual.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Form invariance (or tracelessness) for every basis element.
    pub fn form_invariance_holds(&self) -> bool {
        self.basis.iter().all(|b| self.is_member(b))
    }

    pub fn basis_is_independent(&self) -> bool {
        let mut span = SpanSolver::new(self.n() * self.n());
        self.basis.iter().all(|b| span.insert(&b.flatten()))
    }
}

/// Does the basis element live entirely inside the region?
fn basis_in_region(m: &QMatrix, pred: impl Fn(usize, usize) -> bool) -> bool {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !num_traits::Zero::is_zero(m.get(i, j)) && !pred(i, j) {
                return false;
            }
        }
    }
    true
}

/// Pick out the subalgebra b, u, t, or w of a constructed algebra. Each basis
/// element of the parent lies entirely on one side of the diagonal, so
/// filtering basis elements spans the full subalgebra.
pub fn select_subalgebra(g: &LieAlgebraBasis, tag: SubalgebraTag) -> Subalgebra {
    let t = g.lie_type();
    let n = t.n();
    // w occupies the upper-right corner block: for type A the block is
    // floor(n/2) x ceil(n/2); types B and D skip the middle column.
    let rho = n / 2;
    let col_start = match t.family() {
        Family::A => rho,
        Family::B => t.rank() + 1,
        Family::C | Family::D => t.rank(),
    };
    let pred: Box<dyn Fn(usize, usize) -> bool> = match tag {
        SubalgebraTag::Borel => Box::new(|i, j| i <= j),
        SubalgebraTag::Nilradical => Box::new(|i, j| i < j),
        SubalgebraTag::Cartan => Box::new(|i, j| i == j),
        SubalgebraTag::SquareZero => Box::new(move |i, j| i < rho && j >= col_start),
    };
    let mut basis = Vec::new();
    let mut parent_indices = Vec::new();
    for (k, b) in g.basis().iter().enumerate() {
        if basis_in_region(b, &pred) {
            basis.push(b.clone());
            parent_indices.push(k);
        }
    }
    let sub = Subalgebra {
        tag,
        lie_type: t,
        basis,
        parent_indices,
    };
    debug_assert_eq!(
        sub.dim(),
        match tag {
            SubalgebraTag::Borel => t.dim_u() + t.rank(),
            SubalgebraTag::Nilradical => t.dim_u(),
            SubalgebraTag::Cartan => t.rank(),
            SubalgebraTag::SquareZero => t.dim_w(),
        }
    );
    sub
}

/// The fixed regular nilpotent: sum of the simple-root basis vectors of the
/// realization. Its centralizer dimension equals the rank; tests assert this
/// through the adjoint-kernel oracle.
pub fn regular_nilpotent(g: &LieAlgebraBasis) -> QMatrix {
    let t = g.lie_type();
    let l = t.rank();
    let mut simple: Vec<(usize, usize)> = Vec::new();
    match t.family() {
        Family::A => {
            for i in 0..l {
                simple.push((i, i + 1));
            }
        }
        Family::B | Family::C => {
            for i in 0..l - 1 {
                simple.push((i, i + 1));
            }
            simple.push((l - 1, l));
        }
        Family::D => {
            for i in 0..l - 1 {
                simple.push((i, i + 1));
            }
            simple.push((l - 2, l));
        }
    }
    let n = t.n();
    let mut x = Matrix::zero(n, n);
    for (k, p) in g.params().iter().enumerate() {
        if simple.contains(&(p.row, p.col)) {
            x = x.add(&g.basis()[k]);
        }
    }
    x
}

/// Square-zero corner element of maximal rank: the corner matrix is the
/// diagonal 1 / -1 pattern (with the middle entry forced to zero for skew
/// corners of odd size). Its Jordan type is [2^s, 1^t] with s the corner
/// rank.
pub fn w_representative(g: &LieAlgebraBasis) -> QMatrix {
    let t = g.lie_type();
    let l = t.rank();
    let n = t.n();
    let mut x = Matrix::zero(n, n);
    match t.family() {
        Family::A => {
            let rho = n / 2;
            for i in 0..rho {
                x.set(i, rho + i, rat(1));
            }
        }
        Family::C => {
            for i in 0..l {
                x.set(i, l + i, rat(1));
            }
        }
        Family::B | Family::D => {
            let off = if t.family() == Family::B { l + 1 } else { l };
            for i in 0..l {
                // skew over the anti-diagonal: d_i = -d_{l-1-i}
                match (2 * i).cmp(&(l - 1)) {
                    std::cmp::Ordering::Less => x.set(i, off + i, rat(1)),
                    std::cmp::Ordering::Greater => x.set(i, off + i, rat(-1)),
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    x
}

/// Jordan type of a nilpotent matrix, from the rank sequence of its powers.
pub fn jordan_type(x: &QMatrix) -> Result<Vec<usize>> {
    if x.nilpotency_index().is_none() {
        return Err(Error::Input("matrix is not nilpotent".into()));
    }
    // ranks[k] = rank(x^k) until the powers vanish
    let mut ranks = vec![x.rows()];
    let mut acc = x.clone();
    while !acc.is_zero() {
        ranks.push(acc.rank());
        acc = acc.mul(x);
    }
    ranks.push(0);
    // number of parts of size >= k is ranks[k-1] - ranks[k]
    let ge: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in (1..=ge.len()).rev() {
        let ge_k = ge[k - 1];
        let ge_k1 = if k < ge.len() { ge[k] } else { 0 };
        for _ in 0..ge_k - ge_k1 {
            parts.push(k);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    #[test]
    fn ranks_validated() {
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::B, 2).is_ok());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::D, 3).is_ok());
        assert!(LieType::new(Family::C, 0).is_err());
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(lt(Family::A, 2).coxeter_number(), 3);
        assert_eq!(lt(Family::B, 3).coxeter_number(), 6);
        assert_eq!(lt(Family::C, 2).coxeter_number(), 4);
        assert_eq!(lt(Family::D, 4).coxeter_number(), 6);
    }

    #[test]
    fn parse_names() {
        assert_eq!("C2".parse::<LieType>().unwrap(), lt(Family::C, 2));
        assert_eq!("sl4".parse::<LieType>().unwrap(), lt(Family::A, 3));
        assert_eq!("sp4".parse::<LieType>().unwrap(), lt(Family::C, 2));
        assert_eq!("so7".parse::<LieType>().unwrap(), lt(Family::B, 3));
        assert_eq!("so8".parse::<LieType>().unwrap(), lt(Family::D, 4));
        assert!("E8".parse::<LieType>().is_err());
        assert!("so2".parse::<LieType>().is_err());
    }

    #[test]
    fn dims_match_closed_forms() {
        assert_eq!(construct_algebra(lt(Family::A, 2)).dim(), 8);
        assert_eq!(construct_algebra(lt(Family::C, 2)).dim(), 10);
        assert_eq!(construct_algebra(lt(Family::B, 2)).dim(), 10);
        assert_eq!(construct_algebra(lt(Family::D, 3)).dim(), 15);
    }

    #[test]
    fn form_invariance_b2() {
        let g = construct_algebra(lt(Family::B, 2));
        assert!(g.form_invariance_holds());
    }

    #[test]
    fn closure_and_independence_small_ranks() {
        for t in [
            lt(Family::A, 1),
            lt(Family::A, 2),
            lt(Family::B, 2),
            lt(Family::C, 2),
            lt(Family::D, 3),
        ] {
            let g = construct_algebra(t);
            assert!(g.basis_is_independent(), "{}", t.name());
            assert!(g.form_invariance_holds(), "{}", t.name());
            assert!(g.bracket_closure_holds(), "{}", t.name());
        }
    }

    #[test]
    fn subalgebra_dims() {
        let g = construct_algebra(lt(Family::A, 2));
        assert_eq!(select_subalgebra(&g, SubalgebraTag::Nilradical).dim(), 3);
        assert_eq!(select_subalgebra(&g, SubalgebraTag::Borel).dim(), 5);
        assert_eq!(select_subalgebra(&g, SubalgebraTag::Cartan).dim(), 2);
        let sl4 = construct_algebra(lt(Family::A, 3));
        assert_eq!(select_subalgebra(&sl4, SubalgebraTag::SquareZero).dim(), 4);
        let sp4 = construct_algebra(lt(Family::C, 2));
        assert_eq!(select_subalgebra(&sp4, SubalgebraTag::SquareZero).dim(), 3);
    }

    #[test]
    fn w_is_abelian_and_square_zero() {
        for t in [
            lt(Family::A, 3),
            lt(Family::A, 4),
            lt(Family::B, 3),
            lt(Family::C, 2),
            lt(Family::D, 3),
        ] {
            let g = construct_algebra(t);
            let w = select_subalgebra(&g, SubalgebraTag::SquareZero);
            for x in &w.basis {
                for y in &w.basis {
                    assert!(x.mul(y).is_zero(), "w product nonzero in {}", t.name());
                    assert!(x.bracket(y).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn regular_nilpotent_type_a_has_full_index() {
        for rank in 1..=4 {
            let g = construct_algebra(lt(Family::A, rank));
            let x = regular_nilpotent(&g);
            assert_eq!(x.nilpotency_index(), Some(g.n()));
        }
    }

    #[test]
    fn regular_nilpotent_lies_in_u() {
        for t in [
            lt(Family::A, 2),
            lt(Family::B, 2),
            lt(Family::C, 2),
            lt(Family::D, 3),
        ] {
            let g = construct_algebra(t);
            let x = regular_nilpotent(&g);
            assert!(g.is_member(&x), "{}", t.name());
            assert!(g.contains(&x), "{}", t.name());
            assert!(
                basis_in_region(&x, |i, j| i < j),
                "x_reg not strictly upper in {}",
                t.name()
            );
        }
    }

    #[test]
    fn w_representative_partitions() {
        let sl4 = construct_algebra(lt(Family::A, 3));
        assert_eq!(jordan_type(&w_representative(&sl4)).unwrap(), vec![2, 2]);
        let sl5 = construct_algebra(lt(Family::A, 4));
        assert_eq!(jordan_type(&w_representative(&sl5)).unwrap(), vec![2, 2, 1]);
        let sp4 = construct_algebra(lt(Family::C, 2));
        assert_eq!(jordan_type(&w_representative(&sp4)).unwrap(), vec![2, 2]);
        let so5 = construct_algebra(lt(Family::B, 2));
        let xw = w_representative(&so5);
        assert!(so5.is_member(&xw));
        assert_eq!(jordan_type(&xw).unwrap(), vec![2, 2, 1]);
        let so6 = construct_algebra(lt(Family::D, 3));
        let xw = w_representative(&so6);
        assert!(so6.is_member(&xw));
        assert_eq!(jordan_type(&xw).unwrap(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn w_representative_squares_to_zero() {
        for t in [
            lt(Family::A, 2),
            lt(Family::A, 3),
            lt(Family::B, 3),
            lt(Family::C, 3),
            lt(Family::D, 4),
        ] {
            let g = construct_algebra(t);
            let x = w_representative(&g);
            assert!(x.mul(&x).is_zero(), "{}", t.name());
            assert!(g.is_member(&x), "{}", t.name());
        }
    }

    #[test]
    fn dimension_formulas_hold_through_rank_eight() {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in 1..=8 {
                let Ok(t) = LieType::new(family, rank) else {
                    continue;
                };
                let g = construct_algebra(t);
                assert_eq!(g.dim(), t.dim(), "{}", t.name());
                assert_eq!(
                    select_subalgebra(&g, SubalgebraTag::Nilradical).dim(),
                    t.dim_u(),
                    "{}",
                    t.name()
                );
                assert_eq!(
                    select_subalgebra(&g, SubalgebraTag::SquareZero).dim(),
                    t.dim_w(),
                    "{}",
                    t.name()
                );
            }
        }
    }

    #[test]
    fn jordan_type_of_shift_block() {
        let j3: QMatrix = Matrix::from_fn(3, 3, |i, j| if j == i + 1 { rat(1) } else { rat(0) });
        assert_eq!(jordan_type(&j3).unwrap(), vec![3]);
        let zero: QMatrix = Matrix::zero(2, 2);
        assert_eq!(jordan_type(&zero).unwrap(), vec![1, 1]);
        let id: QMatrix = Matrix::identity(2);
        assert!(jordan_type(&id).is_err());
    }
}
