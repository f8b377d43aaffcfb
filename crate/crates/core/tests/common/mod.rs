//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use lctransfer::arith::GaloisField;
use lctransfer::finite::{Cyclo, SmallField};

pub const SMALL_PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn val(mut x: i64, p: u64) -> u32 {
    let p = p as i64;
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Hilbert symbols by searching for primitive solutions of
/// `z^2 = a x^2 + b y^2` modulo `p^K`, `K = 2 max(val) + 3`.
///
/// In a primitive solution `x` or `y` is a unit (otherwise `p | z`), and
/// scaling makes that coordinate 1, so only `x = 1` and `y = 1` are scanned.
#[derive(Default)]
pub struct HilbertOracle {
    squares: HashMap<u64, Vec<bool>>,
    memo: HashMap<(i64, i64, Option<u64>), i8>,
}

impl HilbertOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn symbol(&mut self, a: i64, b: i64, v: Option<u64>) -> i8 {
        assert!(a != 0 && b != 0);
        let Some(p) = v else {
            return if a < 0 && b < 0 { -1 } else { 1 };
        };
        if let Some(s) = self.memo.get(&(a, b, v)) {
            return *s;
        }
        let k = 2 * val(a, p).max(val(b, p)) + 3;
        let m = p.pow(k);
        let sq = self.squares.entry(m).or_insert_with(|| {
            let mut t = vec![false; m as usize];
            for z in 0..m {
                t[(z as u128 * z as u128 % m as u128) as usize] = true;
            }
            t
        });
        let mi = m as i64;
        let (ar, br) = (a.rem_euclid(mi), b.rem_euclid(mi));
        let solvable = (0..mi).any(|t| {
            let t2 = (t as i128 * t as i128 % mi as i128) as i64;
            let r1 = (ar as i128 + br as i128 * t2 as i128).rem_euclid(mi as i128) as usize;
            let r2 = (ar as i128 * t2 as i128 + br as i128).rem_euclid(mi as i128) as usize;
            sq[r1] || sq[r2]
        });
        let s = if solvable { 1 } else { -1 };
        self.memo.insert((a, b, v), s);
        s
    }

    /// `prod_{i<j} (a_i, a_j)_v`.
    pub fn hasse(&mut self, coeffs: &[i64], v: Option<u64>) -> i8 {
        let mut s = 1;
        for i in 0..coeffs.len() {
            for j in i + 1..coeffs.len() {
                s *= self.symbol(coeffs[i], coeffs[j], v);
            }
        }
        s
    }
}

/// Whether the nonzero integer `x` is a square in `Q_p` (or in `R` for `None`).
pub fn is_square_at(x: i64, v: Option<u64>) -> bool {
    let Some(p) = v else { return x > 0 };
    let e = val(x, p);
    if e % 2 == 1 {
        return false;
    }
    let u = x / (p as i64).pow(e);
    if p == 2 {
        u.rem_euclid(8) == 1
    } else {
        let u = u.rem_euclid(p as i64);
        (1..p as i64).any(|z| z * z % p as i64 == u)
    }
}

/// Representatives of `Q_p^x / Q_p^{x2}`.
pub fn square_classes(p: u64) -> Vec<i64> {
    if p == 2 {
        return vec![1, 3, 5, 7, 2, 6, 10, 14];
    }
    let u = (2..p as i64).find(|u| !is_square_at(*u, Some(p))).unwrap();
    vec![1, u, p as i64, u * p as i64]
}

/// Positive squarefree integers supported on [`SMALL_PRIMES`].
pub fn small_squarefree() -> Vec<i64> {
    (0..16u32)
        .map(|mask| {
            SMALL_PRIMES
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| *p as i64)
                .product()
        })
        .collect()
}

fn sign_vectors() -> impl Iterator<Item = [i8; 4]> {
    (0..16u32).map(|mask| std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 }))
}

fn hyperbolic(n: u32) -> Vec<i64> {
    (0..n).flat_map(|_| [1, -1]).collect()
}

fn diagonal_signature(pos: u32, neg: u32) -> Vec<i64> {
    std::iter::repeat_n(1, pos as usize).chain(std::iter::repeat_n(-1, neg as usize)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Odd,
    /// Even dimension with `delta = (-1)^n` exactly (meaningful for `n` even).
    EvenMinusOnePow,
    /// Even dimension with `delta` ranging over the other classes.
    EvenOther,
    Hermitian,
}

/// Exhaustive search over families of local invariants supported on
/// `{inf, 2, 3, 5, 7}` for a form over the rationals that is definite at
/// infinity, quasi-split at every prime, and satisfies the product formula.
pub fn certificate_exists(h: &mut HilbertOracle, kind: SearchKind, n: u32) -> bool {
    match kind {
        SearchKind::Odd => {
            let d = 2 * n + 1;
            small_squarefree().into_iter().any(|delta| {
                let sign = if n.is_multiple_of(2) { 1 } else { -1 };
                let mut split = hyperbolic(n);
                split.push(sign * delta);
                let at_inf = h.hasse(&diagonal_signature(d, 0), None);
                sign_vectors().any(|s| {
                    let quasi = SMALL_PRIMES.iter().zip(s).all(|(p, sv)| sv == h.hasse(&split, Some(*p)));
                    quasi && s.iter().product::<i8>() * at_inf == 1
                })
            })
        }
        SearchKind::EvenMinusOnePow | SearchKind::EvenOther => {
            let d = 2 * n;
            let deltas: Vec<i64> = match kind {
                SearchKind::EvenMinusOnePow => vec![if n.is_multiple_of(2) { 1 } else { -1 }],
                _ => small_squarefree().into_iter().filter(|x| *x != 1).collect(),
            };
            deltas.into_iter().any(|delta| {
                // a definite form has positive determinant
                if delta < 0 {
                    return false;
                }
                let alpha = if n.is_multiple_of(2) { delta } else { -delta };
                let split = hyperbolic(n);
                [0, n].into_iter().any(|c| {
                    let at_inf = h.hasse(&diagonal_signature(d - 2 * c, 2 * c), None);
                    sign_vectors().any(|s| {
                        let ok = SMALL_PRIMES.iter().zip(s).all(|(p, sv)| {
                            let v = Some(*p);
                            if d == 2 && sv == -1 && is_square_at(-delta, v) {
                                return false;
                            }
                            !is_square_at(alpha, v) || sv == h.hasse(&split, v)
                        });
                        ok && s.iter().product::<i8>() * at_inf == 1
                    })
                })
            })
        }
        SearchKind::Hermitian => {
            let m = n / 2;
            let target = if m.is_multiple_of(2) { 1 } else { -1 };
            small_squarefree().into_iter().map(|x| -x).any(|alpha| {
                [0, n].into_iter().any(|b| {
                    let at_inf = h.symbol(alpha, if b % 2 == 0 { 1 } else { -1 }, None);
                    sign_vectors().any(|s| {
                        let ok = SMALL_PRIMES.iter().zip(s).all(|(p, sv)| {
                            let v = Some(*p);
                            let attainable = square_classes(*p).into_iter().any(|r| h.symbol(alpha, r, v) == sv);
                            attainable && (n % 2 == 1 || sv == h.symbol(alpha, target, v))
                        });
                        ok && s.iter().product::<i8>() * at_inf == 1
                    })
                })
            })
        }
    }
}

/// All `x` in `F_{q^{2r}}` of degree `2r` over `F_q` with `x^{q^r + 1} = 1`,
/// as exponents of the fixed generator, found by scanning every element.
pub fn selfdual_scan(q: u64, r: u32) -> Vec<u64> {
    let big = q.pow(2 * r);
    let table = SmallField::new(big).unwrap();
    let (p, e) = (table.characteristic(), table.degree());
    let field = GaloisField::new(p, e).unwrap();
    let mut out = Vec::new();
    for code in 1..big {
        let x = lctransfer::arith::FfElem::from_code(&field, code);
        if !x.pow(q.pow(r) as u128 + 1).is_one() {
            continue;
        }
        let degree = (1..=2 * r).find(|d| x.pow(q.pow(*d) as u128) == x).unwrap();
        if degree == 2 * r {
            out.push(table.log(code).unwrap());
        }
    }
    out.sort();
    out
}

/// Evaluates a polynomial with coefficient codes at `x` in the table field.
pub fn eval_codes(f: &SmallField, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, c| f.add(f.mul(acc, x), *c))
}

/// `GL_2(F_3)` with its character table assembled from induced characters
/// with values in `Z[zeta_24]`.
pub struct Gl2F3 {
    pub elements: Vec<[u8; 4]>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
    pub reps: Vec<[u8; 4]>,
    pub sizes: Vec<usize>,
    /// Multiplication in `F_9 = F_3[x]/(x^2 + m1 x + m0)`.
    m0: u8,
    m1: u8,
    /// Discrete logarithms in `F_9` w.r.t. the fixed generator, by code `a + 3b`.
    log9: HashMap<u8, i64>,
}

pub const Z24: u64 = 24;

fn mat_mul(x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
    [
        (x[0] * y[0] + x[1] * y[2]) % 3,
        (x[0] * y[1] + x[1] * y[3]) % 3,
        (x[2] * y[0] + x[3] * y[2]) % 3,
        (x[2] * y[1] + x[3] * y[3]) % 3,
    ]
}

fn det(x: &[u8; 4]) -> u8 {
    (x[0] * x[3] + 3 - x[1] * x[2] % 3) % 3
}

fn inverse(x: &[u8; 4]) -> [u8; 4] {
    let d = det(x);
    let di = if d == 1 { 1 } else { 2 };
    let neg = |v: u8| (3 - v) % 3;
    [x[3] * di % 3, neg(x[1]) * di % 3, neg(x[2]) * di % 3, x[0] * di % 3]
}

pub type ClassFn = Vec<Cyclo>;

impl Gl2F3 {
    pub fn new() -> Self {
        let mut elements = Vec::new();
        for code in 0..81u32 {
            let m = [(code % 3) as u8, (code / 3 % 3) as u8, (code / 9 % 3) as u8, (code / 27) as u8];
            if det(&m) != 0 {
                elements.push(m);
            }
        }
        let index: HashMap<[u8; 4], usize> = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let (mut reps, mut sizes) = (Vec::new(), Vec::new());
        for i in 0..elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut size = 0;
            for x in &elements {
                let j = index[&mat_mul(&mat_mul(x, &elements[i]), &inverse(x))];
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    size += 1;
                }
            }
            reps.push(elements[i]);
            sizes.push(size);
        }
        let modulus = GaloisField::new(3, 2).unwrap().modulus().to_vec();
        let (m0, m1) = (modulus[0] as u8, modulus[1] as u8);
        let mut g = Gl2F3 { elements, class_of, reps, sizes, m0, m1, log9: HashMap::new() };
        let gen = SmallField::new(9).unwrap().generator() as u8;
        let mut x = 1u8;
        for k in 0..8 {
            g.log9.insert(x, k);
            x = g.f9_mul(x, gen);
        }
        assert_eq!(g.log9.len(), 8);
        g
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn f9_mul(&self, x: u8, y: u8) -> u8 {
        let (a, b, c, d) = (x % 3, x / 3, y % 3, y / 3);
        // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, x^2 = -m0 - m1 x
        let bd = b * d % 3;
        let c0 = (a * c + 2 * bd * self.m0) % 3;
        let c1 = (a * d + b * c + 2 * bd * self.m1) % 3;
        c0 + 3 * c1
    }

    fn f9_add(&self, x: u8, y: u8) -> u8 {
        (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3)
    }

    /// Matrix of multiplication by `t` in the basis `{1, x}`.
    fn regular(&self, t: u8) -> [u8; 4] {
        let col0 = t;
        let col1 = self.f9_mul(t, 3);
        [col0 % 3, col1 % 3, col0 / 3, col1 / 3]
    }

    fn log_f3(&self, a: u8) -> i64 {
        self.log9[&a]
    }

    fn chi8(&self, k: i64, e: i64) -> Cyclo {
        Cyclo::root_of_unity(Z24, 3 * k * e)
    }

    /// Character of `F_3^x` of index `i` (0 trivial, 1 sign).
    fn sign(&self, i: i64, a: u8) -> Cyclo {
        Cyclo::root_of_unity(Z24, 12 * i * (a == 2) as i64)
    }

    fn induce(&self, h_order: i64, phi: impl Fn(&[u8; 4]) -> Option<Cyclo>) -> ClassFn {
        self.reps
            .iter()
            .map(|g| {
                let mut acc = Cyclo::zero(Z24);
                for x in &self.elements {
                    if let Some(v) = phi(&mat_mul(&mat_mul(x, g), &inverse(x))) {
                        acc = acc.add(&v);
                    }
                }
                divide(&acc, h_order)
            })
            .collect()
    }

    pub fn linear(&self, i: i64) -> ClassFn {
        self.reps.iter().map(|g| self.sign(i, det(g))).collect()
    }

    /// `Ind_B (alpha x beta)` for characters of `F_3^x` of indices `i, j`.
    pub fn principal_induced(&self, i: i64, j: i64) -> ClassFn {
        self.induce(12, |m| (m[2] == 0).then(|| self.sign(i, m[0]).mul(&self.sign(j, m[3]))))
    }

    /// `Ind_{ZN}(xi|_Z psi) - Ind_T(xi)` for the character `g^e -> zeta_8^{k e}` of `F_9^x`.
    pub fn cuspidal(&self, k: i64) -> ClassFn {
        let zn = self.induce(6, |m| {
            (m[2] == 0 && m[0] == m[3]).then(|| {
                let z = m[0];
                let ainv = if z == 1 { 1 } else { 2 };
                let n = (m[1] * ainv % 3) as i64;
                self.chi8(k, self.log_f3(z)).mul(&Cyclo::root_of_unity(Z24, 8 * n))
            })
        });
        let torus: HashMap<[u8; 4], u8> = (1..9u8).map(|t| (self.regular(t), t)).collect();
        let t = self.induce(8, |m| torus.get(m).map(|t| self.chi8(k, self.log9[t])));
        zn.iter().zip(&t).map(|(a, b)| a.add(&b.neg())).collect()
    }

    /// The full table: 2 linear, 2 Steinberg twists, 1 principal series, 3 cuspidal.
    pub fn table(&self) -> Vec<ClassFn> {
        let mut rows = Vec::new();
        for i in 0..2 {
            rows.push(self.linear(i));
        }
        for i in 0..2 {
            let st: ClassFn =
                self.principal_induced(i, i).iter().zip(self.linear(i)).map(|(a, b)| a.add(&b.neg())).collect();
            rows.push(st);
        }
        rows.push(self.principal_induced(0, 1));
        for k in [1, 2, 5] {
            rows.push(self.cuspidal(k));
        }
        rows
    }

    /// `(1/|G|) sum chi(g) conj(psi(g))`, an integer for characters.
    pub fn inner(&self, a: &ClassFn, b: &ClassFn) -> i64 {
        let mut acc = Cyclo::zero(Z24);
        for (c, size) in self.sizes.iter().enumerate() {
            acc = acc.add(&a[c].mul(&b[c].conj()).mul(&Cyclo::integer(Z24, *size as i64)));
        }
        divide(&acc, self.order() as i64).as_integer().expect("inner products are integers")
    }

    /// Class of a matrix in the exponent notation of the library.
    pub fn green_class(&self, m: &[u8; 4]) -> lctransfer::finite::GreenClass {
        use lctransfer::finite::GreenClass;
        let tr = (m[0] + m[3]) % 3;
        let d = det(m);
        let scalar = m[1] == 0 && m[2] == 0 && m[0] == m[3];
        let roots: Vec<u8> = (1..9u8)
            .filter(|z| {
                let lin = self.f9_mul((3 - tr) % 3, *z);
                self.f9_add(self.f9_mul(*z, *z), self.f9_add(lin, d)) == 0
            })
            .collect();
        let in_f3 = |z: u8| z < 3;
        match roots.as_slice() {
            [z] if scalar => GreenClass::Central(self.log9[z]),
            [z] => GreenClass::Unipotent(self.log9[z]),
            [x, y] if in_f3(*x) && in_f3(*y) => GreenClass::Split(self.log9[x], self.log9[y]),
            [x, _] => GreenClass::Elliptic(self.log9[x]),
            _ => unreachable!("characteristic polynomial of degree 2"),
        }
    }
}

impl Default for Gl2F3 {
    fn default() -> Self {
        Self::new()
    }
}

pub fn divide(x: &Cyclo, d: i64) -> Cyclo {
    let terms: Vec<(i64, i64)> = x
        .terms()
        .into_iter()
        .map(|(e, c)| {
            assert_eq!(c % d, 0, "not divisible by {d}");
            (e as i64, c / d)
        })
        .collect();
    Cyclo::from_terms(x.modulus(), terms)
}
