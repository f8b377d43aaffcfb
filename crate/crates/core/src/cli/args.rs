use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use crate::arith::{CoeffJson, HalfInt, Place, Rational};
use crate::finite::GreenClass;
use crate::forms::{DiagQuadForm, GlobalCertificate};
use crate::wd::WDRep;

#[derive(Parser, Debug)]
#[command(
    name = "lctransfer",
    version,
    about = "Exact computations for unramified transfer, form invariants and congruences mod l",
    after_help = "Pass --stdin to read flags from a JSON object on standard input.\n\
                  LCTRANSFER_AUX_BOUND sets the auxiliary-place search bound (default 10000)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

pub(crate) fn rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|e| e.to_string())
}

pub(crate) fn nonzero(s: &str) -> Result<Rational, String> {
    let x = rational(s)?;
    if x.is_zero() {
        return Err("must be nonzero".into());
    }
    Ok(x)
}

fn place(s: &str) -> Result<Place, String> {
    Place::from_str(s).map_err(|e| e.to_string())
}

fn half(s: &str) -> Result<HalfInt, String> {
    HalfInt::from_str(s).map_err(|e| e.to_string())
}

fn json<T: DeserializeOwned>(s: &str) -> Result<T, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid JSON: {e}"))
}

fn form(s: &str) -> Result<DiagQuadForm, String> {
    let coeffs = s.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    DiagQuadForm::new(coeffs).map_err(|e| e.to_string())
}

fn codes(s: &str) -> Result<Codes, String> {
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| format!("{x:?} is not an element code")))
        .collect::<Result<_, _>>()
        .map(Codes)
}

fn class(s: &str) -> Result<GreenClass, String> {
    GreenClass::from_str(s).map_err(|e| e.to_string())
}

/// A JSON list of coefficients `{half_exponent: rational}`.
#[derive(Clone, Debug)]
pub struct Coeffs(pub Vec<CoeffJson>);

fn coeffs(s: &str) -> Result<Coeffs, String> {
    json(s).map(Coeffs)
}

fn coeff(s: &str) -> Result<CoeffJson, String> {
    json(s)
}

fn rep(s: &str) -> Result<WDRep, String> {
    json(s)
}

fn cert(s: &str) -> Result<GlobalCertificate, String> {
    json(s)
}

/// Comma-separated element codes of a small finite field.
#[derive(Clone, Debug)]
pub struct Codes(pub Vec<u64>);

#[derive(Args, Debug)]
pub struct GlArgs {
    /// Residue cardinality of the coefficient field.
    #[arg(long)]
    pub q: u64,
    /// Residue cardinality of the target field (defaults to q).
    #[arg(long)]
    pub q_target: Option<u64>,
    /// Eigenvalues as a JSON list of `{half_exponent: coefficient}` maps.
    #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
    pub eig: Coeffs,
}

#[derive(Args, Debug)]
pub struct SatakeArgs {
    /// Group name such as Sp4, SO5, SO4, SO4-ns, U3, U3-split.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub q: u64,
    /// Satake parameter as a JSON list of coefficients.
    #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
    pub chars: Coeffs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Odd,
    Even,
    Hermitian,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GlobalizeKind {
    Quadratic,
    Hermitian,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ParityArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    #[value(name = "remark-6.4")]
    So5Congruence,
    So2,
    KloostermanOdd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Hilbert symbol (a, b)_v.
    #[command(allow_negative_numbers = true)]
    Hilbert {
        #[arg(short = 'a', long = "a", value_parser = nonzero, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(short = 'b', long = "b", value_parser = nonzero, allow_hyphen_values = true)]
        b: Option<Rational>,
        #[arg(short = 'p', long = "place", value_parser = place)]
        p: Option<Place>,
        /// `A B P` given positionally.
        #[arg(value_name = "A B P", num_args = 0..=3)]
        positional: Vec<String>,
    },
    /// Legendre symbol (a / p).
    Legendre {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        p: u64,
    },
    /// Places where (a, b)_v can be -1, with the product of the symbols.
    ReciprocitySupport {
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        b: Rational,
    },
    /// ell-adic valuation of a nonzero rational.
    Valuation {
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long)]
        ell: u64,
    },
    /// Residue field data for (ell, q), optionally reducing a coefficient.
    Reduce {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = coeff, allow_hyphen_values = true)]
        x: Option<CoeffJson>,
    },
    /// Local invariants of a diagonal form at a place.
    Profile {
        /// Comma-separated coefficients.
        #[arg(long, value_parser = form, allow_hyphen_values = true)]
        form: DiagQuadForm,
        #[arg(long, value_parser = place)]
        place: Place,
    },
    /// Local (with --place) or global equivalence of two diagonal forms.
    Equivalent {
        #[arg(long, value_parser = form, allow_hyphen_values = true)]
        f: DiagQuadForm,
        #[arg(long, value_parser = form, allow_hyphen_values = true)]
        g: DiagQuadForm,
        #[arg(long, value_parser = place)]
        place: Option<Place>,
    },
    /// Isomorphism type of SO(f) at a prime.
    Classify {
        #[arg(long, value_parser = form, allow_hyphen_values = true)]
        form: DiagQuadForm,
        #[arg(long, value_parser = place)]
        place: Place,
    },
    /// Hasse invariant of the split special orthogonal form.
    SplitHasse {
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        delta: Rational,
        #[arg(long, value_parser = place)]
        place: Place,
    },
    /// Hasse invariant of the trace form of a Hermitian form.
    TraceHasse {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        delta: Rational,
        #[arg(long, value_parser = place)]
        place: Place,
    },
    /// Existence of a definite form with quasi-split groups at every prime.
    Exists {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        /// The discriminant equals (-1)^n (even kind only).
        #[arg(long)]
        delta_is_minus_one_pow_n: bool,
        /// A discriminant to compare with (-1)^n instead of the flag.
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true, conflicts_with = "delta_is_minus_one_pow_n")]
        delta: Option<Rational>,
    },
    /// Global certificate with prescribed local data at one prime.
    Globalize {
        #[arg(long, value_enum, default_value = "quadratic")]
        kind: GlobalizeKind,
        #[arg(long, value_parser = place)]
        place: Option<Place>,
        /// Quadratic: dimension of the target.
        #[arg(long)]
        dim: Option<u32>,
        /// Quadratic: discriminant of the target.
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        disc: Option<Rational>,
        /// Quadratic: Hasse invariant of the target.
        #[arg(long, allow_hyphen_values = true)]
        hasse: Option<i8>,
        /// Quadratic: global discriminant (defaults to a positive representative).
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        global_disc: Option<Rational>,
        /// Hermitian: dimension.
        #[arg(long)]
        n: Option<u32>,
        /// Hermitian: negative parameter of the quadratic algebra.
        #[arg(long, value_parser = nonzero, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        /// Hermitian: prescribed (alpha, delta)_w at --place.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<i8>,
    },
    /// Check a global certificate.
    CheckCert {
        #[arg(long, value_parser = cert)]
        cert: GlobalCertificate,
    },
    /// Smallest auxiliary prime where the group of a certificate splits.
    AuxPlace {
        #[arg(long, value_parser = cert)]
        cert: GlobalCertificate,
    },
    /// A diagonal form realizing a quadratic certificate.
    Realize {
        #[arg(long, value_parser = cert)]
        cert: GlobalCertificate,
    },
    /// Transfer of a Satake parameter to the general linear group.
    Transfer(SatakeArgs),
    /// Characteristic polynomial, constant term first.
    Charpoly(GlArgs),
    /// Whether the eigenvalue multiset is closed under inversion.
    IsSelfdual(GlArgs),
    /// ell-integrality of a Satake parameter (--group, --chars) or GL parameter (--eig).
    Integral {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        q_target: Option<u64>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        chars: Option<Coeffs>,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        eig: Option<Coeffs>,
    },
    /// Congruence mod ell of two GL parameters.
    Congruent {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        q_target: Option<u64>,
        #[arg(long)]
        ell: u64,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        eig1: Coeffs,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        eig2: Coeffs,
    },
    /// Whether two Satake parameters have the same reduced Weyl orbit.
    Support {
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        chars1: Coeffs,
        #[arg(long, value_parser = coeffs, allow_hyphen_values = true)]
        chars2: Coeffs,
    },
    /// Twist by the sign character of the square root of q when it matters.
    Flip {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        gl: GlArgs,
    },
    /// Base change to an extension with residue degree f and degree d.
    BaseChange {
        #[command(flatten)]
        gl: GlArgs,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        d: u32,
    },
    /// Transfer from split SO_2 to GL_2.
    So2 {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = coeff, allow_hyphen_values = true)]
        c: CoeffJson,
    },
    /// Twist by |det|^k.
    DetTwist {
        #[command(flatten)]
        gl: GlArgs,
        #[arg(long, value_parser = half, allow_hyphen_values = true)]
        k: HalfInt,
    },
    /// Exponents of the modulus character on the first m coordinates.
    ModulusExponents {
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
    /// Validate a Weil-Deligne representation.
    WdValidate {
        #[arg(long, value_parser = rep)]
        rep: WDRep,
    },
    /// Frobenius semisimplification.
    WdSs {
        #[arg(long, value_parser = rep)]
        rep: WDRep,
    },
    /// Integral model of a block upper triangular representation.
    WdIntegral {
        #[arg(long, value_parser = rep)]
        rep: WDRep,
        #[arg(long)]
        ell: u64,
        /// Size of the first diagonal block.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Reduced Frobenius eigenvalues.
    WdReduce {
        #[arg(long, value_parser = rep)]
        rep: WDRep,
        #[arg(long)]
        ell: u64,
    },
    /// Congruence mod ell of two representations.
    WdCongruent {
        #[arg(long, value_parser = rep)]
        rep1: WDRep,
        #[arg(long, value_parser = rep)]
        rep2: WDRep,
        #[arg(long)]
        ell: u64,
    },
    /// The unramified representation of a GL parameter.
    WdFromParam(GlArgs),
    /// The GL parameter of an unramified semisimple representation.
    WdToParam {
        #[arg(long, value_parser = rep)]
        rep: WDRep,
    },
    /// Regularity of a character of F_{q^2}^x, or its cuspidal character value.
    Green {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// identity, central:j, unipotent:j, split:i,j or elliptic:j
        #[arg(long, value_parser = class)]
        class: Option<GreenClass>,
    },
    /// Congruence mod ell of two characters of F_{q^2}^x.
    GreenCongruent {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        k1: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        #[arg(long)]
        ell: u64,
    },
    /// Number of cuspidal factors of the ramified quadratic base change.
    BcLength {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Normal form of a generic tuple (characteristic 2).
    NormalForm {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = codes)]
        a: Codes,
    },
    /// Torus conjugation of a generic tuple.
    IwahoriAction {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = codes)]
        chi: Codes,
        #[arg(long, value_parser = codes)]
        u: Codes,
    },
    /// Kloosterman sum of a generic tuple.
    Kloosterman {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = codes)]
        u: Codes,
        #[arg(long)]
        a: u64,
    },
    /// Count of simple cuspidal representations, with orbit enumeration when small.
    SimpleOrbits {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Self-dual cuspidal parameters in F_{q^{2r}}.
    SelfdualParams {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u32,
    },
    /// Scripted reproduction scenarios.
    Repro {
        #[arg(value_enum)]
        scenario: Scenario,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
    },
}
