//! Grids on the quadric `x1 x4 - x2 x3`, their ruling lines and tangent
//! planes, special linear forms, and projections to a plane.
//!
//! The grid point `P_ij` is the Segre image of `([1:u_i], [1:v_j])`, namely
//! `(1, v_j, u_i, u_i v_j)`. The line `lambda_i` keeps `u = u_i` fixed and
//! `mu_j` keeps `v = v_j` fixed. The linear form dual to a point has the same
//! coordinates as the point.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{distinct_scalars, Field, RandomSeed};
use crate::ideals::{ci_power_dim_formula, fat_points_piece, CiPowerIdeal, FatPointsSpec};
use crate::poly::{Degree, GradingSpec, PolyRing, PolyVector};

pub type Point<F> = [<F as Field>::Elem; 4];
pub type PlanePoint<F> = [<F as Field>::Elem; 3];

/// Where grid parameters come from.
#[derive(Debug, Clone)]
pub enum GridParams<F: Field> {
    Random(RandomSeed),
    Explicit { u: Vec<F::Elem>, v: Vec<F::Elem> },
}

#[derive(Debug, Clone)]
pub struct GridConfig<F: Field> {
    field: F,
    a: usize,
    b: usize,
    u: Vec<F::Elem>,
    v: Vec<F::Elem>,
}

impl<F: Field> GridConfig<F> {
    /// Builds an `a x b` grid. If `a > b` the two rulings are swapped so
    /// that `a <= b` always holds.
    pub fn new(field: F, a: usize, b: usize, params: GridParams<F>) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::InvalidGrid(format!("grid dimensions must be at least 2, got {a}x{b}")));
        }
        let (u, v) = match params {
            GridParams::Random(seed) => {
                let u = distinct_scalars(&field, &mut seed.stream("grid-u", 0), a);
                let v = distinct_scalars(&field, &mut seed.stream("grid-v", 0), b);
                (u, v)
            }
            GridParams::Explicit { u, v } => {
                if u.len() != a || v.len() != b {
                    return Err(Error::InvalidGrid(format!(
                        "{}x{} parameters for a {a}x{b} grid",
                        u.len(),
                        v.len()
                    )));
                }
                (u, v)
            }
        };
        check_distinct(&u, 0)?;
        check_distinct(&v, a)?;
        let (a, b, u, v) = if a > b { (b, a, v, u) } else { (a, b, u, v) };
        Ok(GridConfig { field, a, b, u, v })
    }

    pub fn from_ints(field: F, u: &[i64], v: &[i64]) -> Result<Self> {
        let uu = u.iter().map(|&x| field.from_i64(x)).collect();
        let vv = v.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, u.len(), v.len(), GridParams::Explicit { u: uu, v: vv })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn u(&self) -> &[F::Elem] {
        &self.u
    }

    pub fn v(&self) -> &[F::Elem] {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.a * self.b
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_square(&self) -> bool {
        self.a == self.b
    }

    pub fn point(&self, i: usize, j: usize) -> Point<F> {
        let f = &self.field;
        [f.one(), self.v[j].clone(), self.u[i].clone(), f.mul(&self.u[i], &self.v[j])]
    }

    /// All grid points, row-major in `(i, j)`.
    pub fn points(&self) -> Vec<Point<F>> {
        self.indices().map(|(i, j)| self.point(i, j)).collect()
    }

    pub fn indices(&self) -> impl Iterator<Item = (usize, usize)> {
        let b = self.b;
        (0..self.a).flat_map(move |i| (0..b).map(move |j| (i, j)))
    }

    pub fn dual_form(&self, i: usize, j: usize) -> Point<F> {
        self.point(i, j)
    }

    /// The grid as points of P^1 x P^1, coordinates `(x0, x1, y0, y1)`.
    pub fn bigraded_points(&self) -> Vec<Point<F>> {
        let f = &self.field;
        self.indices()
            .map(|(i, j)| [f.one(), self.u[i].clone(), f.one(), self.v[j].clone()])
            .collect()
    }

    pub fn quadric(&self, ring: &PolyRing<F>) -> Result<PolyVector<F>> {
        ring.from_int_terms(Degree::Total(2), &[([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)])
    }

    /// Coefficients of the tangent plane at `P_ij`:
    /// `u_i v_j x1 - u_i x2 - v_j x3 + x4`.
    pub fn tangent_plane(&self, i: usize, j: usize) -> Point<F> {
        let f = &self.field;
        [f.mul(&self.u[i], &self.v[j]), f.neg(&self.u[i]), f.neg(&self.v[j]), f.one()]
    }

    /// Two points spanning `lambda_i` (`u = u_i`): `P_i0` and the direction
    /// `(0, 1, 0, u_i)`.
    pub fn lambda_line(&self, i: usize) -> (Point<F>, Point<F>) {
        let f = &self.field;
        (self.point(i, 0), [f.zero(), f.one(), f.zero(), self.u[i].clone()])
    }

    /// Two points spanning `mu_j` (`v = v_j`).
    pub fn mu_line(&self, j: usize) -> (Point<F>, Point<F>) {
        let f = &self.field;
        (self.point(0, j), [f.zero(), f.zero(), f.one(), self.v[j].clone()])
    }

    pub fn eval_linear(&self, form: &Point<F>, p: &Point<F>) -> F::Elem {
        crate::poly::dot(&self.field, form, p)
    }

    /// Grid points lying on the plane with the given coefficients.
    pub fn points_on_plane(&self, plane: &Point<F>) -> Vec<(usize, usize)> {
        self.indices()
            .filter(|&(i, j)| self.field.is_zero(&self.eval_linear(plane, &self.point(i, j))))
            .collect()
    }

    /// Tangent planes `Lambda_ij` containing the point.
    pub fn tangent_planes_through(&self, p: &Point<F>) -> Vec<(usize, usize)> {
        self.indices()
            .filter(|&(i, j)| self.field.is_zero(&self.eval_linear(&self.tangent_plane(i, j), p)))
            .collect()
    }

    /// The subgrid on the given row and column indices.
    pub fn subgrid(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let u = rows.iter().map(|&i| self.u[i].clone()).collect();
        let v = cols.iter().map(|&j| self.v[j].clone()).collect();
        Self::new(self.field.clone(), rows.len(), cols.len(), GridParams::Explicit { u, v })
    }

    pub fn to_json(&self) -> GridJson {
        GridJson {
            a: self.a,
            b: self.b,
            u: self.u.iter().map(|x| self.field.to_json(x)).collect(),
            v: self.v.iter().map(|x| self.field.to_json(x)).collect(),
            prime: self.field.characteristic(),
        }
    }

    fn grid_index(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.a || j >= self.b {
            return Err(Error::InvalidLocus(format!(
                "grid point ({},{}) outside a {}x{} grid",
                i + 1,
                j + 1,
                self.a,
                self.b
            )));
        }
        Ok(())
    }
}

fn check_distinct<T: PartialEq>(xs: &[T], offset: usize) -> Result<()> {
    for (k, x) in xs.iter().enumerate() {
        if xs[..k].contains(x) {
            return Err(Error::DuplicateParameter(offset + k));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridJson {
    pub a: usize,
    pub b: usize,
    pub u: Vec<serde_json::Value>,
    pub v: Vec<serde_json::Value>,
    pub prime: Option<u64>,
}

/// Families of points of P^3 that linear forms are drawn from. Indices are
/// zero-based; the text form is one-based, e.g. `plane(1,1)`, `lambda(2)`,
/// `mu(1)`, `chord(1,2;2,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Locus {
    Generic,
    Plane(usize, usize),
    Lambda(usize),
    Mu(usize),
    Chord((usize, usize), (usize, usize)),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Locus::Generic => write!(f, "generic"),
            Locus::Plane(i, j) => write!(f, "plane({},{})", i + 1, j + 1),
            Locus::Lambda(i) => write!(f, "lambda({})", i + 1),
            Locus::Mu(j) => write!(f, "mu({})", j + 1),
            Locus::Chord((i, j), (k, l)) => write!(f, "chord({},{};{},{})", i + 1, j + 1, k + 1, l + 1),
        }
    }
}

impl FromStr for Locus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        if s == "generic" {
            return Ok(Locus::Generic);
        }
        let bad = || Error::InvalidLocus(format!("cannot parse locus {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(|x| match x.parse::<usize>() {
                    Ok(n) if n >= 1 => Ok(n - 1),
                    _ => Err(bad()),
                })
                .collect()
        };
        match name {
            "plane" => match nums(inner)?.as_slice() {
                [i, j] => Ok(Locus::Plane(*i, *j)),
                _ => Err(bad()),
            },
            "lambda" | "ruling-lambda" => match nums(inner)?.as_slice() {
                [i] => Ok(Locus::Lambda(*i)),
                _ => Err(bad()),
            },
            "mu" | "ruling-mu" => match nums(inner)?.as_slice() {
                [j] => Ok(Locus::Mu(*j)),
                _ => Err(bad()),
            },
            "chord" => {
                let (p, q) = inner.split_once(';').ok_or_else(bad)?;
                match (nums(p)?.as_slice(), nums(q)?.as_slice()) {
                    ([i, j], [k, l]) => Ok(Locus::Chord((*i, *j), (*k, *l))),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}

impl<F: Field> GridConfig<F> {
    /// A random point of the locus; the linear form dual to it has the same
    /// coordinates.
    pub fn sample_point<R: Rng + ?Sized>(&self, locus: Locus, rng: &mut R) -> Result<Point<F>> {
        let f = &self.field;
        match locus {
            Locus::Generic => Ok(std::array::from_fn(|_| f.random_nonzero(rng))),
            Locus::Plane(i, j) => {
                self.grid_index(i, j)?;
                let p = self.point(i, j);
                loop {
                    let s = f.random_nonzero(rng);
                    let w = f.random_nonzero(rng);
                    if self.on_plane_chord(i, j, &s, &w) {
                        continue;
                    }
                    // P_ij + s (0,1,0,u_i) + w (0,0,1,v_j)
                    return Ok([
                        p[0].clone(),
                        f.add(&p[1], &s),
                        f.add(&p[2], &w),
                        f.add(&p[3], &f.add(&f.mul(&s, &self.u[i]), &f.mul(&w, &self.v[j]))),
                    ]);
                }
            }
            Locus::Lambda(i) => {
                self.grid_index(i, 0)?;
                let v = self.fresh_scalar(&self.v, rng);
                Ok([f.one(), v.clone(), self.u[i].clone(), f.mul(&self.u[i], &v)])
            }
            Locus::Mu(j) => {
                self.grid_index(0, j)?;
                let u = self.fresh_scalar(&self.u, rng);
                Ok([f.one(), self.v[j].clone(), u.clone(), f.mul(&u, &self.v[j])])
            }
            Locus::Chord((i, j), (k, l)) => {
                self.grid_index(i, j)?;
                self.grid_index(k, l)?;
                if (i, j) == (k, l) {
                    return Err(Error::InvalidLocus("chord endpoints must differ".into()));
                }
                let p = self.point(i, j);
                let q = self.point(k, l);
                let s = loop {
                    let s = f.random_nonzero(rng);
                    if s != f.one() {
                        break s;
                    }
                };
                Ok(std::array::from_fn(|c| f.add(&p[c], &f.mul(&s, &f.sub(&q[c], &p[c])))))
            }
        }
    }

    pub fn sample_form<R: Rng + ?Sized>(&self, locus: Locus, rng: &mut R) -> Result<Point<F>> {
        self.sample_point(locus, rng)
    }

    fn fresh_scalar<R: Rng + ?Sized>(&self, avoid: &[F::Elem], rng: &mut R) -> F::Elem {
        loop {
            let x = self.field.random_nonzero(rng);
            if !avoid.contains(&x) {
                return x;
            }
        }
    }

    // In the affine chart of Lambda_ij with coordinates (s, w) around P_ij,
    // P_{i,j'} sits at (v_j' - v_j, 0) and P_{i',j} at (0, u_i' - u_i). The
    // chord through them is s * B + w * A = A * B.
    fn on_plane_chord(&self, i: usize, j: usize, s: &F::Elem, w: &F::Elem) -> bool {
        let f = &self.field;
        for jj in (0..self.b).filter(|&jj| jj != j) {
            let a = f.sub(&self.v[jj], &self.v[j]);
            for ii in (0..self.a).filter(|&ii| ii != i) {
                let b = f.sub(&self.u[ii], &self.u[i]);
                if f.add(&f.mul(s, &b), &f.mul(w, &a)) == f.mul(&a, &b) {
                    return true;
                }
            }
        }
        false
    }
}

/// Images of grid points under a projection to a plane. Points whose
/// images coincide are merged; `preimages` records which grid points land
/// on each image point.
#[derive(Debug, Clone)]
pub struct PlanePointSet<F: Field> {
    pub points: Vec<PlanePoint<F>>,
    pub preimages: Vec<Vec<(usize, usize)>>,
}

impl<F: Field> PlanePointSet<F> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Groups of distinct grid points with a common image.
    pub fn collisions(&self) -> Vec<Vec<(usize, usize)>> {
        self.preimages.iter().filter(|g| g.len() > 1).cloned().collect()
    }
}

/// Projection from a center `P` onto the plane `H`, in three coordinates
/// on `H`.
#[derive(Debug, Clone)]
pub struct Projection<F: Field> {
    field: F,
    center: Point<F>,
    target: Point<F>,
    dropped: usize,
}

impl<F: Field> Projection<F> {
    pub fn new(field: F, center: Point<F>, target: Point<F>) -> Result<Self> {
        let hp = crate::poly::dot(&field, &target, &center);
        if field.is_zero(&hp) {
            return Err(Error::InvalidProjection("target plane passes through the center".into()));
        }
        let dropped = target.iter().position(|c| !field.is_zero(c)).expect("nonzero plane");
        Ok(Projection { field, center, target, dropped })
    }

    /// A projection from `center` to a random plane avoiding it.
    pub fn to_random_plane<R: Rng + ?Sized>(field: F, center: Point<F>, rng: &mut R) -> Result<Self> {
        loop {
            let h: Point<F> = std::array::from_fn(|_| field.random_nonzero(rng));
            if !field.is_zero(&crate::poly::dot(&field, &h, &center)) {
                return Self::new(field, center, h);
            }
        }
    }

    pub fn center(&self) -> &Point<F> {
        &self.center
    }

    /// `H(P) X - H(X) P`, which lies on `H`, written in the coordinates of
    /// `H` obtained by dropping one coordinate. `None` for the center itself.
    pub fn image(&self, x: &Point<F>) -> Option<PlanePoint<F>> {
        let f = &self.field;
        let hp = crate::poly::dot(f, &self.target, &self.center);
        let hx = crate::poly::dot(f, &self.target, x);
        let y: Vec<F::Elem> = (0..4).map(|c| f.sub(&f.mul(&hp, &x[c]), &f.mul(&hx, &self.center[c]))).collect();
        if y.iter().all(|c| f.is_zero(c)) {
            return None;
        }
        let mut out = y.into_iter().enumerate().filter(|(c, _)| *c != self.dropped).map(|(_, e)| e);
        Some([out.next().unwrap(), out.next().unwrap(), out.next().unwrap()])
    }

    /// Image of the line through two points, as the coefficients of a
    /// linear form on the plane; `None` if the line passes through the
    /// center.
    pub fn image_line(&self, p: &Point<F>, q: &Point<F>) -> Option<PlanePoint<F>> {
        let a = self.image(p)?;
        let b = self.image(q)?;
        let f = &self.field;
        let cross = [
            f.sub(&f.mul(&a[1], &b[2]), &f.mul(&a[2], &b[1])),
            f.sub(&f.mul(&a[2], &b[0]), &f.mul(&a[0], &b[2])),
            f.sub(&f.mul(&a[0], &b[1]), &f.mul(&a[1], &b[0])),
        ];
        (!cross.iter().all(|c| f.is_zero(c))).then_some(cross)
    }
}

pub fn project_from_point<F: Field>(grid: &GridConfig<F>, projection: &Projection<F>) -> Result<PlanePointSet<F>> {
    let f = grid.field();
    let mut set = PlanePointSet { points: Vec::new(), preimages: Vec::new() };
    for (i, j) in grid.indices() {
        let img = projection.image(&grid.point(i, j)).ok_or(Error::CenterOnGrid((i + 1, j + 1)))?;
        match set.points.iter().position(|q| projectively_equal(f, q, &img)) {
            Some(k) => set.preimages[k].push((i, j)),
            None => {
                set.points.push(img);
                set.preimages.push(vec![(i, j)]);
            }
        }
    }
    Ok(set)
}

pub fn projectively_equal<F: Field>(field: &F, p: &[F::Elem], q: &[F::Elem]) -> bool {
    // all 2x2 minors vanish
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if field.mul(&p[i], &q[j]) != field.mul(&p[j], &q[i]) {
                return false;
            }
        }
    }
    true
}

/// The forms `f = prod pi(lambda_i)` and `g = prod pi(mu_j)` in `k[P^2]`
/// cutting out the projected grid.
pub fn projected_ci_forms<F: Field>(
    grid: &GridConfig<F>,
    projection: &Projection<F>,
    plane: &PolyRing<F>,
) -> Result<(PolyVector<F>, PolyVector<F>)> {
    let line_product = |lines: Vec<(Point<F>, Point<F>)>| -> Result<PolyVector<F>> {
        let mut acc = plane.one();
        for (p, q) in lines {
            let l = projection
                .image_line(&p, &q)
                .ok_or_else(|| Error::InvalidProjection("a ruling line passes through the center".into()))?;
            acc = plane.mul(&acc, &plane.linear_form(&l)?)?;
        }
        Ok(acc)
    };
    let f = line_product((0..grid.a()).map(|i| grid.lambda_line(i)).collect())?;
    let g = line_product((0..grid.b()).map(|j| grid.mu_line(j)).collect())?;
    Ok((f, g))
}

/// Whether a plane point set is a complete intersection of type `(a, b)`:
/// it has `ab` points, the Hilbert function of such a complete intersection
/// in every degree up to `a + b - 2`, and its lowest-degree generators form
/// a regular sequence.
///
/// The Hilbert function alone does not decide this: five collinear points
/// plus four general ones have the Hilbert function of a `(3,3)` complete
/// intersection, but both cubics through them contain the line.
pub fn is_ci_hilbert<F: Field>(field: &F, pts: &PlanePointSet<F>, a: usize, b: usize) -> Result<bool> {
    is_ci_hilbert_points(field, &pts.points, a, b)
}

pub fn is_ci_hilbert_points<F: Field>(field: &F, pts: &[PlanePoint<F>], a: usize, b: usize) -> Result<bool> {
    let (a, b) = (a.min(b), a.max(b));
    if pts.len() != a * b {
        return Ok(false);
    }
    let ring = PolyRing::new(field.clone(), GradingSpec::P2);
    let spec = FatPointsSpec::new(&ring, pts.iter().map(|p| p.to_vec()).collect(), 1)?;
    let mut pieces = Vec::new();
    for t in 0..=(a + b).saturating_sub(2) {
        let piece = fat_points_piece(&ring, &spec, Degree::Total(t))?;
        if piece.dim() as i64 != ci_power_dim_formula(a as i64, b as i64, 1, t as i64) {
            return Ok(false);
        }
        pieces.push(piece);
    }
    let row = |t: usize, k: usize| PolyVector::<F> {
        grading: GradingSpec::P2,
        degree: Degree::Total(t),
        coeffs: pieces[t].rref().row(k).to_vec(),
    };
    let f = row(a, 0);
    let g = if a == b {
        row(b, 1)
    } else {
        // a general member of [I]_b
        let mut rng = RandomSeed(0).stream("ci-check", 0);
        let mut g = ring.zero(Degree::Total(b))?;
        for k in 0..pieces[b].dim() {
            g = ring.add(&g, &ring.scale(&row(b, k), &field.random_nonzero(&mut rng)))?;
        }
        g
    };
    match CiPowerIdeal::new(ring, &f, &g, 1) {
        Ok(_) => Ok(true),
        Err(Error::DegenerateCi(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn grid(a: usize, b: usize) -> GridConfig<PrimeField> {
        GridConfig::new(PrimeField::default(), a, b, GridParams::Random(RandomSeed(5))).unwrap()
    }

    #[test]
    fn explicit_grid_lies_on_quadric() {
        let g = GridConfig::from_ints(PrimeField::default(), &[1, 2, 3], &[1, 2, 3]).unwrap();
        let ring = PolyRing::new(*g.field(), GradingSpec::P3);
        let q = g.quadric(&ring).unwrap();
        assert_eq!(g.points().len(), 9);
        for p in g.points() {
            assert_eq!(ring.eval(&q, &p).unwrap(), 0);
        }
    }

    #[test]
    fn three_by_six() {
        let g = grid(3, 6);
        assert_eq!(g.len(), 18);
        assert_eq!((g.a(), g.b()), (3, 6));
        let swapped = grid(6, 3);
        assert_eq!((swapped.a(), swapped.b()), (3, 6));
    }

    #[test]
    fn duplicate_parameters_rejected() {
        let err = GridConfig::from_ints(PrimeField::default(), &[1, 2, 2], &[1, 2, 3]).unwrap_err();
        assert_eq!(err, Error::DuplicateParameter(2));
        let err = GridConfig::from_ints(PrimeField::default(), &[1, 2], &[5, 5]).unwrap_err();
        assert_eq!(err, Error::DuplicateParameter(3));
        assert!(GridConfig::from_ints(PrimeField::default(), &[1], &[1, 2]).is_err());
    }

    #[test]
    fn tangent_planes_contain_exactly_their_rulings() {
        for (a, b) in [(2, 2), (3, 3), (3, 6), (4, 5)] {
            let g = grid(a, b);
            for (i, j) in g.indices() {
                let on = g.points_on_plane(&g.tangent_plane(i, j));
                assert_eq!(on.len(), a + b - 1);
                assert!(on.iter().all(|&(k, l)| k == i || l == j));
            }
        }
    }

    #[test]
    fn locus_parsing_round_trips() {
        for s in ["generic", "plane(1,1)", "lambda(2)", "mu(3)", "chord(1,2;2,1)"] {
            let l: Locus = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("plane(0,1)".parse::<Locus>().is_err());
        assert!("circle(1)".parse::<Locus>().is_err());
    }

    #[test]
    fn sampled_points_lie_on_their_loci() {
        let g = grid(3, 3);
        let mut rng = RandomSeed(1).stream("locus", 0);
        let p = g.sample_point(Locus::Plane(0, 0), &mut rng).unwrap();
        assert!(g.field().is_zero(&g.eval_linear(&g.tangent_plane(0, 0), &p)));
        assert_eq!(g.tangent_planes_through(&p), vec![(0, 0)]);

        let p = g.sample_point(Locus::Chord((0, 1), (1, 0)), &mut rng).unwrap();
        assert_eq!(g.tangent_planes_through(&p), vec![(0, 0), (1, 1)]);

        let p = g.sample_point(Locus::Lambda(0), &mut rng).unwrap();
        assert_eq!(g.tangent_planes_through(&p), vec![(0, 0), (0, 1), (0, 2)]);

        let wide = grid(3, 5);
        let p = wide.sample_point(Locus::Mu(4), &mut rng).unwrap();
        assert_eq!(wide.tangent_planes_through(&p).len(), 3);

        assert!(g.sample_point(Locus::Plane(3, 0), &mut rng).is_err());
        assert!(g.sample_point(Locus::Chord((0, 0), (0, 0)), &mut rng).is_err());
    }

    #[test]
    fn projections_and_collisions() {
        let g = grid(3, 3);
        let f = *g.field();
        let mut rng = RandomSeed(2).stream("proj", 0);

        let center = g.sample_point(Locus::Generic, &mut rng).unwrap();
        let proj = Projection::to_random_plane(f, center, &mut rng).unwrap();
        let img = project_from_point(&g, &proj).unwrap();
        assert_eq!(img.len(), 9);
        assert!(img.collisions().is_empty());
        assert!(is_ci_hilbert(&f, &img, 3, 3).unwrap());

        let center = g.sample_point(Locus::Chord((0, 1), (1, 0)), &mut rng).unwrap();
        let proj = Projection::to_random_plane(f, center, &mut rng).unwrap();
        let img = project_from_point(&g, &proj).unwrap();
        assert_eq!(img.len(), 8);
        assert_eq!(img.collisions(), vec![vec![(0, 1), (1, 0)]]);

        let center = g.sample_point(Locus::Lambda(0), &mut rng).unwrap();
        let proj = Projection::to_random_plane(f, center, &mut rng).unwrap();
        let img = project_from_point(&g, &proj).unwrap();
        assert_eq!(img.len(), 7);
        assert_eq!(img.collisions(), vec![vec![(0, 0), (0, 1), (0, 2)]]);

        let center = g.sample_point(Locus::Plane(0, 0), &mut rng).unwrap();
        let proj = Projection::to_random_plane(f, center, &mut rng).unwrap();
        let img = project_from_point(&g, &proj).unwrap();
        assert_eq!(img.len(), 9);
        assert!(!is_ci_hilbert(&f, &img, 3, 3).unwrap());

        let proj = Projection::to_random_plane(f, g.point(1, 1), &mut rng).unwrap();
        assert_eq!(project_from_point(&g, &proj).unwrap_err(), Error::CenterOnGrid((2, 2)));
    }

    #[test]
    fn generic_plane_points_are_not_ci() {
        let f = PrimeField::default();
        let mut rng = RandomSeed(4).stream("plane-pts", 0);
        let pts: Vec<PlanePoint<PrimeField>> =
            (0..9).map(|_| std::array::from_fn(|_| f.random_nonzero(&mut rng))).collect();
        assert!(!is_ci_hilbert_points(&f, &pts, 3, 3).unwrap());
    }

    #[test]
    fn projected_lines_cut_out_the_image() {
        let g = grid(3, 4);
        let f = *g.field();
        let mut rng = RandomSeed(8).stream("ci", 0);
        let center = g.sample_point(Locus::Generic, &mut rng).unwrap();
        let proj = Projection::to_random_plane(f, center, &mut rng).unwrap();
        let plane = PolyRing::new(f, GradingSpec::P2);
        let (cf, cg) = projected_ci_forms(&g, &proj, &plane).unwrap();
        assert_eq!(cf.degree, Degree::Total(3));
        assert_eq!(cg.degree, Degree::Total(4));
        for p in project_from_point(&g, &proj).unwrap().points {
            assert_eq!(plane.eval(&cf, &p).unwrap(), 0);
            assert_eq!(plane.eval(&cg, &p).unwrap(), 0);
        }
    }
}
