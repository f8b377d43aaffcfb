use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use super::certificate::{certificate_check, CertKind, GlobalCertificate};
use super::profile::{local_profile, DiagQuadForm};
use crate::arith::hilbert::{hilbert_symbol, squarefree_kernel};
use crate::arith::primes::primes;
use crate::arith::{Place, Rational};
use crate::error::{invalid, Error, Result};

const MAX_DIM: u32 = 6;
const MAX_EXTRA_PRIMES: usize = 3;
const MAX_TRIALS: u64 = 2_000_000;

/// Searches for a diagonal form over the rationals with the invariants of
/// a quadratic certificate. Coefficients are signed squarefree products of
/// the relevant primes, widened by a few small primes when necessary.
pub fn realize_form(c: &GlobalCertificate) -> Result<DiagQuadForm> {
    if c.kind == CertKind::Hermitian {
        return Err(invalid("only quadratic certificates can be realized"));
    }
    if c.dim > MAX_DIM {
        return Err(invalid(format!("realization supports dimension at most {MAX_DIM}")));
    }
    let report = certificate_check(c)?;
    if !report.ok {
        return Err(invalid(format!("invalid certificate: {}", report.failures.join("; "))));
    }
    let base: BTreeSet<u64> = c.relevant_primes()?;
    let extras: Vec<u64> = primes().filter(|p| !base.contains(p)).take(MAX_EXTRA_PRIMES).collect();
    let mut trials = 0u64;
    for k in 0..=extras.len() {
        let mut ps: Vec<u64> = base.iter().copied().collect();
        ps.extend(&extras[..k]);
        if let Some(f) = search(c, &ps, &mut trials)? {
            verify(c, &f, &ps)?;
            return Ok(f);
        }
    }
    Err(Error::SearchExhausted { bound: MAX_TRIALS })
}

fn candidates(ps: &[u64]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::new();
    for mask in 0u32..(1 << ps.len()) {
        let m: BigInt = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(BigInt::from(1), |acc, (_, p)| acc * p);
        out.push(m);
    }
    out.sort();
    out.into_iter().flat_map(|m| [m.clone(), -m]).collect()
}

fn search(c: &GlobalCertificate, ps: &[u64], trials: &mut u64) -> Result<Option<DiagQuadForm>> {
    let d = c.dim as usize;
    let delta = c.disc.as_ref().expect("valid quadratic certificate");
    let cands = candidates(ps);
    let rats: Vec<Rational> = cands.iter().map(|m| Rational::from_int(m.clone())).collect();
    let index: HashMap<BigInt, usize> = cands.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let places: Vec<Place> = ps.iter().map(|p| Place::Finite(*p)).collect();
    let targets: Vec<i8> = places.iter().map(|v| c.sign_at(*v)).collect();
    let negatives = 2 * c.real as usize;
    let nc = cands.len();
    let mut table = vec![vec![0i8; nc * nc]; places.len()];
    for (t, v) in places.iter().enumerate() {
        for i in 0..nc {
            for j in 0..nc {
                table[t][i * nc + j] = hilbert_symbol(&rats[i], &rats[j], *v)?;
            }
        }
    }

    let mut idx = vec![0usize; d - 1];
    loop {
        *trials += 1;
        if *trials > MAX_TRIALS {
            return Err(Error::SearchExhausted { bound: MAX_TRIALS });
        }
        let prod = idx.iter().fold(delta.clone(), |acc, i| &acc * &rats[*i]);
        let last = squarefree_kernel(&prod)?;
        if let Some(&li) = index.get(&last) {
            let mut all = idx.clone();
            all.push(li);
            let neg = all.iter().filter(|i| rats[**i].is_negative()).count();
            if neg == negatives {
                let ok = (0..places.len()).all(|t| {
                    let mut s = 1i8;
                    for a in 0..d {
                        for b in a + 1..d {
                            s *= table[t][all[a] * nc + all[b]];
                        }
                    }
                    s == targets[t]
                });
                if ok {
                    all.sort();
                    let f = DiagQuadForm::new(all.iter().map(|i| rats[*i].clone()).collect())?;
                    return Ok(Some(f));
                }
            }
        }
        // next non-decreasing index tuple
        let mut pos = d - 1;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            if idx[pos] + 1 < nc {
                let v = idx[pos] + 1;
                for x in idx[pos..].iter_mut() {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn verify(c: &GlobalCertificate, f: &DiagQuadForm, ps: &[u64]) -> Result<()> {
    let delta = c.disc.as_ref().expect("valid");
    let inf = local_profile(f, Place::Infinity)?;
    let d = c.dim;
    let ok_inf = inf.signature == Some((d - 2 * c.real, 2 * c.real));
    let ok_disc = squarefree_kernel(&f.disc())? == squarefree_kernel(delta)?;
    let mut ok_places = true;
    for p in ps {
        let v = Place::Finite(*p);
        ok_places &= local_profile(f, v)?.hasse == c.sign_at(v);
    }
    if ok_inf && ok_disc && ok_places {
        Ok(())
    } else {
        Err(invalid("internal: realized form failed re-verification"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::certificate::Anchor;
    use crate::forms::globalize::{globalize_quadratic, DEFAULT_SEARCH_BOUND};
    use crate::forms::profile::LocalProfile;
    use std::collections::BTreeMap;

    fn cert(dim: u32, disc: i64, signs: &[(u64, i8)], real: u32) -> GlobalCertificate {
        let signs: BTreeMap<Place, i8> = signs.iter().map(|(p, s)| (Place::Finite(*p), *s)).collect();
        GlobalCertificate {
            kind: if dim.is_multiple_of(2) { CertKind::QuadraticEven } else { CertKind::QuadraticOdd },
            dim,
            disc: Some(disc.into()),
            alpha: None,
            support: signs.keys().copied().collect(),
            signs,
            real,
            anchored: None::<Anchor>,
        }
    }

    #[test]
    fn examples() {
        let f = realize_form(&cert(2, 1, &[], 0)).unwrap();
        assert_eq!(f, DiagQuadForm::from_ints(&[1, 1]).unwrap());
        let f = realize_form(&cert(2, 1, &[(2, -1)], 1)).unwrap();
        assert_eq!(f, DiagQuadForm::from_ints(&[-1, -1]).unwrap());
        let f = realize_form(&cert(2, 2, &[(2, 1)], 0)).unwrap();
        assert_eq!(squarefree_kernel(&f.disc()).unwrap(), 2.into());
    }

    #[test]
    fn realizes_globalized_certificates() {
        for hasse in [1, -1] {
            let t = LocalProfile::finite(Place::Finite(5), 4, &2.into(), hasse).unwrap();
            let c = globalize_quadratic(&t, &2.into(), DEFAULT_SEARCH_BOUND).unwrap();
            let f = realize_form(&c).unwrap();
            assert!(local_profile(&f, Place::Finite(5)).unwrap().matches(&t).unwrap());
        }
    }
}
