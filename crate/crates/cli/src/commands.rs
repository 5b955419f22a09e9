//! One function per subcommand. Each returns an [`Outcome`] whose JSON
//! report carries `"schema": 1`.

use serde::Serialize;
use serde_json::{json, Value};

use rackcoh::cochain::{tuple_count, tuples};
use rackcoh::combinatorics::{shuffles, ShuffleClass};
use rackcoh::cubical::{enumerate_trunk_maps, eta, nerve_face, restrict_labelling, RackCubeLabel};
use rackcoh::morphism::{composite_s_check, induced_h1, verify_algebra_morphism, verify_chain_map, MAX_S_DEGREE};
use rackcoh::products::{
    check_cup_leibniz, check_dendriform, check_leibniz, check_star_associativity, ProductReport, RackProducts,
    Sampling,
};
use rackcoh::scalar::{CoefficientDomain, IntDomain, Mat2, Mat2Domain, ModDomain, ModInt};
use rackcoh::structures::{conj_rack, Structure};
use rackcoh::{Coefficient, CoefficientSpec, Complex, ComplexTag, Error, FiniteGroup, FiniteRack};

use crate::{bad, versioned, Outcome, Result};

/// Largest number of rows allowed in a differential handed to Smith form.
pub const COHOMOLOGY_GUARD: usize = 8192;

/// Call a generic `f::<T, D>(.., &domain)` with the coefficient type and
/// domain named by a [`CoefficientSpec`].
macro_rules! with_coefficients {
    ($spec:expr, $f:ident($($arg:expr),*)) => {
        match *$spec {
            CoefficientSpec::Integers => $f::<i64, _>($($arg,)* &IntDomain::default()),
            CoefficientSpec::IntegersMod { modulus } => $f::<ModInt, _>($($arg,)* &ModDomain { modulus }),
            CoefficientSpec::MatrixRing { dim: 2, modulus: 0 } => {
                $f::<Mat2<i64>, _>($($arg,)* &Mat2Domain { inner: IntDomain::default() })
            }
            CoefficientSpec::MatrixRing { dim: 2, modulus } => {
                $f::<Mat2<ModInt>, _>($($arg,)* &Mat2Domain { inner: ModDomain { modulus } })
            }
            CoefficientSpec::MatrixRing { dim, .. } => Err(Error::Coefficients(format!("{dim}x{dim} matrices"))),
        }
    };
}

fn tag_name(tag: ComplexTag) -> &'static str {
    match tag {
        ComplexTag::Rack => "rack",
        ComplexTag::Pointed => "pointed",
        ComplexTag::Group => "group",
        ComplexTag::Cubical => "cubical",
    }
}

pub fn cohomology(
    structure: &Structure,
    tag: Option<ComplexTag>,
    degree: usize,
    coeff: &CoefficientSpec,
    matrices: bool,
) -> Result<Outcome> {
    let conj;
    let (complex, tag) = match structure {
        Structure::Rack { rack, action } => match tag.unwrap_or(ComplexTag::Rack) {
            ComplexTag::Rack => match action {
                Some(a) if !a.is_trivial() => (Complex::Twisted(rack, a), ComplexTag::Rack),
                _ => (Complex::Rack(rack), ComplexTag::Rack),
            },
            ComplexTag::Pointed => {
                if rack.unit().is_none() {
                    return Err(bad(format!("{} has no unit; the pointed complex needs one", rack.name())));
                }
                (Complex::Pointed(rack), ComplexTag::Pointed)
            }
            t => return Err(bad(format!("the {} complex needs a group", tag_name(t)))),
        },
        Structure::Group(g) => match tag.unwrap_or(ComplexTag::Group) {
            ComplexTag::Group => (Complex::Group(g), ComplexTag::Group),
            ComplexTag::Cubical => (Complex::CubicalGroup(g), ComplexTag::Cubical),
            t => {
                conj = conj_rack(g);
                let c = if t == ComplexTag::Pointed { Complex::Pointed(&conj) } else { Complex::Rack(&conj) };
                (c, t)
            }
        },
    };
    let rows = tuple_count(complex.size(), degree + 1)?;
    if rows > COHOMOLOGY_GUARD {
        return Err(bad(format!("{}^{} cochains exceed the guard of {COHOMOLOGY_GUARD}", complex.size(), degree + 1)));
    }
    let h = complex.cohomology(degree, coeff)?;
    let mut body = json!({
        "structure": structure.name(),
        "complex": tag_name(tag),
        "coefficients": coeff.to_string(),
        "degree": degree,
        "betti": h.betti,
        "torsion": h.torsion,
        "pass": true,
    });
    if matrices {
        let d_out = complex.diff_matrix_i64(degree)?.to_rows();
        let d_in = if degree == 0 { Vec::new() } else { complex.diff_matrix_i64(degree - 1)?.to_rows() };
        body["matrices"] = json!({ "d_in": d_in, "d_out": d_out });
    }
    let name = match tag {
        ComplexTag::Group | ComplexTag::Cubical => "H",
        _ => "HR",
    };
    let text = format!("{name}^{degree}({} [{}]; {coeff}) = {h}\n", structure.name(), tag_name(tag));
    Ok(Outcome { pass: true, report: versioned("cohomology", body), text })
}

/// Dendriform, ⋆-associativity and Leibniz reports for one rack.
pub fn rack_product_reports<T: Coefficient, D: CoefficientDomain<T>>(
    rack: &FiniteRack,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
    domain: &D,
) -> rackcoh::Result<Vec<ProductReport>> {
    let alg = RackProducts { rack };
    let leibniz: Vec<(usize, usize)> =
        (0..=max_degree).flat_map(|p1| (0..=max_degree - p1).map(move |p2| (p1, p2))).collect();
    Ok(vec![
        check_dendriform(&alg, domain, coefficients, max_degree, sampling)?,
        check_star_associativity(&alg, domain, coefficients, max_degree, sampling)?,
        check_leibniz(&alg, domain, coefficients, &leibniz, sampling)?,
    ])
}

fn cup_report<T: Coefficient, D: CoefficientDomain<T>>(
    g: &FiniteGroup,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
    domain: &D,
) -> rackcoh::Result<ProductReport> {
    check_cup_leibniz(g, domain, coefficients, max_degree, sampling)
}

fn algebra_report<T: Coefficient, D: CoefficientDomain<T>>(
    g: &FiniteGroup,
    coefficients: &str,
    max_degree: usize,
    sampling: Sampling,
    domain: &D,
) -> rackcoh::Result<ProductReport> {
    verify_algebra_morphism(g, domain, coefficients, max_degree, sampling)
}

fn product_lines(reports: &[ProductReport]) -> String {
    let mut text = String::new();
    for r in reports {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        text.push_str(&format!("{:<20} {:<12} {:<8} {verdict}", r.identity, r.structure, r.coefficients));
        if let Some(cx) = &r.counterexample {
            text.push_str(&format!("  {} at {:?} degrees {:?}: {} != {}", cx.equation, cx.tuple, cx.degrees, cx.lhs, cx.rhs));
        }
        text.push('\n');
    }
    text
}

pub fn products_check(structure: &Structure, coeff: &CoefficientSpec, max_degree: usize, sampling: Sampling) -> Result<Outcome> {
    if max_degree > MAX_S_DEGREE {
        return Err(bad(format!("--max-degree {max_degree} is above the limit {MAX_S_DEGREE}")));
    }
    let cs = coeff.to_string();
    let (rack, group) = match structure {
        Structure::Rack { rack, .. } => (rack.clone(), None),
        Structure::Group(g) => (conj_rack(g), Some(g)),
    };
    let mut reports = with_coefficients!(coeff, rack_product_reports(&rack, &cs, max_degree, sampling))?;
    if let Some(g) = group {
        reports.push(with_coefficients!(coeff, cup_report(g, &cs, max_degree, sampling))?);
    }
    let pass = reports.iter().all(|r| r.pass);
    let body = json!({
        "structure": structure.name(),
        "coefficients": cs,
        "max_degree": max_degree,
        "sampling": sampling,
        "reports": reports,
        "pass": pass,
    });
    Ok(Outcome { pass, report: versioned("products-check", body), text: product_lines(&reports) })
}

pub fn morphism_check(g: &FiniteGroup, coeff: &CoefficientSpec, max_degree: usize, sampling: Sampling) -> Result<Outcome> {
    if max_degree > MAX_S_DEGREE {
        return Err(bad(format!("--max-degree {max_degree} is above the limit {MAX_S_DEGREE}")));
    }
    let cs = coeff.to_string();
    let modulus = match *coeff {
        CoefficientSpec::Integers => 0,
        CoefficientSpec::IntegersMod { modulus } | CoefficientSpec::MatrixRing { modulus, .. } => modulus,
    };
    let mut report = verify_chain_map(g, &cs, modulus, max_degree)?;
    let algebra = with_coefficients!(coeff, algebra_report(g, &cs, max_degree, sampling))?;
    report.algebra_morphism_pass = Some(algebra.pass);
    report.algebra_morphism = Some(algebra);
    let mut composite = true;
    for n in 0..=max_degree.min(2) {
        composite &= composite_s_check(g, n)?;
    }
    report.composite_pass = Some(composite);
    let primes: Vec<u64> = match *coeff {
        CoefficientSpec::IntegersMod { modulus } => vec![modulus],
        _ => vec![2, 3, 5],
    };
    for p in primes {
        match induced_h1(g, p) {
            Ok(h) => report.injectivity.push(h),
            Err(Error::NotPrime(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let pass = report.pass();
    let mut text = String::new();
    for c in &report.chain_map {
        text.push_str(&format!("chain map n={} ({}x{}): {}\n", c.degree, c.rows, c.cols, verdict(c.pass)));
    }
    text.push_str(&format!("algebra morphism: {}\n", verdict(report.algebra_morphism_pass == Some(true))));
    text.push_str(&format!("composite definition: {}\n", verdict(composite)));
    for h in &report.injectivity {
        text.push_str(&format!(
            "p={}: dim H1 = {}, dim HR1 = {}, rank = {}, injective: {}\n",
            h.prime, h.dim_group_h1, h.dim_rack_hr1, h.rank, h.injective
        ));
    }
    let mut body = serde_json::to_value(&report).expect("reports serialize");
    body["pass"] = json!(pass);
    Ok(Outcome { pass, report: versioned("morphism-check", body), text })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NerveMismatch {
    pub check: String,
    pub tuple: Vec<usize>,
    pub expected: Vec<usize>,
    pub found: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NerveDegree {
    pub degree: usize,
    pub trunk_maps: usize,
    pub tuples: usize,
    pub face_checks: usize,
    pub pass: bool,
    pub mismatch: Option<NerveMismatch>,
}

/// Brute-force trunk maps against η-labellings of tuples, and restricted
/// labellings against the nerve face formulas, in one degree.
pub fn nerve_degree(rack: &FiniteRack, n: usize) -> rackcoh::Result<NerveDegree> {
    let mut brute = enumerate_trunk_maps(rack, n)?;
    brute.sort_unstable();
    let mut labellings = Vec::new();
    let mut face_checks = 0;
    let mut mismatch = None;
    'outer: for x in tuples(rack.size(), n) {
        let lab = RackCubeLabel::new(rack, x.clone())?.labelling(rack);
        let back = eta(n, &lab);
        if back != x {
            mismatch = Some(NerveMismatch { check: "eta".into(), tuple: x, expected: Vec::new(), found: back });
            break;
        }
        for i in 1..=n {
            for eps in 0..2u8 {
                let face = nerve_face(rack, i, eps, &x)?;
                let direct = RackCubeLabel::new(rack, face)?.labelling(rack);
                let restricted = restrict_labelling(n, i, eps, &lab);
                face_checks += 1;
                if direct != restricted {
                    let check = format!("face {i},{eps}");
                    mismatch = Some(NerveMismatch { check, tuple: x, expected: direct, found: restricted });
                    break 'outer;
                }
            }
        }
        labellings.push(lab);
    }
    labellings.sort_unstable();
    if mismatch.is_none() && labellings != brute {
        let pos = labellings.iter().zip(&brute).position(|(a, b)| a != b).unwrap_or(labellings.len().min(brute.len()));
        let (expected, found) = (brute.get(pos).cloned().unwrap_or_default(), labellings.get(pos).cloned().unwrap_or_default());
        mismatch = Some(NerveMismatch { check: "trunk maps".into(), tuple: Vec::new(), expected, found });
    }
    Ok(NerveDegree {
        degree: n,
        trunk_maps: brute.len(),
        tuples: tuple_count(rack.size(), n)?,
        face_checks,
        pass: mismatch.is_none(),
        mismatch,
    })
}

pub fn nerve_check(rack: &FiniteRack, max_degree: usize) -> Result<Outcome> {
    let degrees = (0..=max_degree).map(|n| nerve_degree(rack, n)).collect::<rackcoh::Result<Vec<_>>>()?;
    let pass = degrees.iter().all(|d| d.pass);
    let mut text = String::new();
    for d in &degrees {
        text.push_str(&format!(
            "n={}: {} trunk maps, {} tuples, {} face checks: {}\n",
            d.degree,
            d.trunk_maps,
            d.tuples,
            d.face_checks,
            verdict(d.pass)
        ));
        if let Some(m) = &d.mismatch {
            text.push_str(&format!("  first mismatch ({}) at {:?}: {:?} vs {:?}\n", m.check, m.tuple, m.expected, m.found));
        }
    }
    let body = json!({ "structure": rack.name(), "degrees": degrees, "pass": pass });
    Ok(Outcome { pass, report: versioned("nerve-check", body), text })
}

pub fn shuffle(p1: usize, p2: usize, class: &str) -> Result<Outcome> {
    if p1 + p2 > 12 {
        return Err(bad("p1 + p2 is limited to 12"));
    }
    let cls: ShuffleClass = class.parse()?;
    let list = shuffles(p1, p2, cls);
    let mut text = String::new();
    let entries: Vec<Value> = list
        .iter()
        .map(|s| {
            let images = s.perm.images();
            let shown: Vec<String> = images.iter().map(|v| v.to_string()).collect();
            text.push_str(&format!("{:+} [{}]\n", s.sign, shown.join(" ")));
            json!({ "images": images, "sign": s.sign })
        })
        .collect();
    let body = json!({
        "p1": p1,
        "p2": p2,
        "class": cls,
        "count": entries.len(),
        "shuffles": entries,
        "pass": true,
    });
    Ok(Outcome { pass: true, report: versioned("shuffle", body), text })
}
