use std::fmt::Display;
use std::str::FromStr;

use orthochar2::fibermodel::{
    build_adjoint_pair, descent_obstruction, phi_class_in_quotient, twisted_form, verify_nondegenerate_twist,
    verify_twist_identity, FiberModel, ModelKind, Sl2Fiber, DESCENT_SCOPE,
};
use orthochar2::linalg::{Matrix, Subspace};
use orthochar2::ortho::{
    family_generators, family_matrix, lie_algebra, parabolic, parabolic_by_intersection, quotient_sequence_report,
    shape_equivalence, so7_form, so8_form, stabilizes, standard_plane, symmetric_square_tensor, FamilyKind,
    LieSubalgebra, LieVariant, QuotientMaps,
};
use orthochar2::quadform::{polarization_report, sym2_sequence_report, BilinearForm, QuadraticForm};
use orthochar2::scalars::{is_square, Field, FiniteField, Gf2, Gf2k, Gf4, RationalFunction, Tower};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::{census_lines, sharded_elements};
use crate::report::{Line, Report};

/// Runs `$body` with `$F` bound to `Gf2k<k>`.
macro_rules! with_gf2k {
    ($k:expr, $F:ident => $body:expr) => {
        match $k {
            1 => { type $F = Gf2k<1>; $body }
            2 => { type $F = Gf2k<2>; $body }
            3 => { type $F = Gf2k<3>; $body }
            4 => { type $F = Gf2k<4>; $body }
            5 => { type $F = Gf2k<5>; $body }
            6 => { type $F = Gf2k<6>; $body }
            7 => { type $F = Gf2k<7>; $body }
            8 => { type $F = Gf2k<8>; $body }
            k => unreachable!("unsupported degree {k}"),
        }
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Polar,
    Sym2,
    Lie,
    Parabolic,
    Quotient,
    Dickson,
    Isotropic,
    Fiber,
    Descent,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Polar,
        Suite::Sym2,
        Suite::Lie,
        Suite::Parabolic,
        Suite::Quotient,
        Suite::Dickson,
        Suite::Isotropic,
        Suite::Fiber,
        Suite::Descent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Polar => "polar",
            Suite::Sym2 => "sym2",
            Suite::Lie => "lie",
            Suite::Parabolic => "parabolic",
            Suite::Quotient => "quotient",
            Suite::Dickson => "dickson",
            Suite::Isotropic => "isotropic",
            Suite::Fiber => "fiber",
            Suite::Descent => "descent",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restrict dimension sweeps to this `n`.
    pub n: Option<usize>,
    /// Restrict the finite field to GF(2^k).
    pub k: Option<u8>,
    pub seed: u64,
    pub threads: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { n: None, k: None, seed: 0, threads: 1 }
    }
}

impl SuiteOptions {
    fn ks(&self, default: &[u8]) -> Vec<u8> {
        self.k.map_or_else(|| default.to_vec(), |k| vec![k])
    }

    fn ns(&self, max: usize) -> Vec<usize> {
        self.n.map_or_else(|| (1..=max).collect(), |n| vec![n])
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Runs one suite (or all of them, in a fixed order) and returns its report. With several
/// threads, the suites of `all` run concurrently and are reassembled in order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Report {
    let mut report = Report::default();
    report.push(Line::info("seed").kv("seed", opts.seed));
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let parts: Vec<Report> = if opts.threads > 1 && suites.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_one(s, opts))).collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        })
    } else {
        suites.iter().map(|&s| run_one(s, opts)).collect()
    };
    for part in parts {
        report.extend(part);
    }
    report
}

fn run_one(suite: Suite, opts: &SuiteOptions) -> Report {
    let lines = match suite {
        Suite::Polar => polar(opts),
        Suite::Sym2 => sym2(opts),
        Suite::Lie => lie(opts),
        Suite::Parabolic => parabolic_suite(opts),
        Suite::Quotient => quotient(opts),
        Suite::Dickson => dickson(opts),
        Suite::Isotropic => isotropic(opts),
        Suite::Fiber => fiber(opts),
        Suite::Descent => descent(),
        Suite::All => unreachable!("expanded by run_suite"),
    };
    Report { lines }
}

pub fn monomial(i: usize, j: usize) -> String {
    if i == j {
        format!("x{}^2", i + 1)
    } else {
        format!("x{}*x{}", i + 1, j + 1)
    }
}

pub fn vector<F: Display>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// `e1+e5` style name of a 0/1 vector, falling back to coordinates.
pub fn unit_sum<F: Field>(v: &[F]) -> String {
    if v.iter().all(|x| x.is_zero() || x.is_one()) {
        let parts: Vec<String> =
            v.iter().enumerate().filter(|(_, x)| x.is_one()).map(|(i, _)| format!("e{}", i + 1)).collect();
        if parts.is_empty() { "0".into() } else { parts.join("+") }
    } else {
        vector(v)
    }
}

fn random_element<F: FiniteField>(rng: &mut ChaCha8Rng) -> F {
    F::from_index(rng.gen_range(0..F::ORDER))
}

fn polar(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    for k in opts.ks(&[1, 2]) {
        with_gf2k!(k, F => {
            lines.push(Line::info("polar.field").kv("field", F::field_name()));
            for n in opts.ns(6) {
                let r = polarization_report::<F>(n);
                lines.push(Line::check("polar.ker.dim", r.kernel_dim == n).kv("n", n).kv("dim", r.kernel_dim));
                lines.push(Line::check("polar.coker.dim", r.coker_dim == n).kv("n", n).kv("dim", r.coker_dim));
                lines.push(Line::check("polar.rank", r.rank + n == r.source_dim).kv("n", n).kv("rank", r.rank));
                lines.push(Line::check("polar.ker.squares", r.kernel_are_squares).kv("n", n));
                lines.push(Line::check("polar.coker.diagonal", r.coker_is_diagonal).kv("n", n));
            }
        });
    }
    // Q(v + w) + Q(v) + Q(w) = beta(v, w) and Q(a v) = a^2 Q(v) on random data
    let mut rng = opts.rng(1);
    let samples = 200;
    let mut failure = None;
    for s in 0..samples {
        let n = rng.gen_range(1..=6);
        let coeffs: Vec<Gf4> = (0..n * (n + 1) / 2).map(|_| random_element(&mut rng)).collect();
        let q = QuadraticForm::from_coefficients(n, coeffs).expect("coefficient count");
        let v: Vec<Gf4> = (0..n).map(|_| random_element(&mut rng)).collect();
        let w: Vec<Gf4> = (0..n).map(|_| random_element(&mut rng)).collect();
        let a: Gf4 = random_element(&mut rng);
        let sum: Vec<Gf4> = v.iter().zip(&w).map(|(x, y)| *x + *y).collect();
        let av: Vec<Gf4> = v.iter().map(|x| a * *x).collect();
        let ev = |x: &[Gf4]| q.evaluate(x).expect("length n");
        let ok = ev(&sum) + ev(&v) + ev(&w) == q.polarize().eval(&v, &w) && ev(&av) == a * a * ev(&v);
        if !ok && failure.is_none() {
            failure = Some(s);
        }
    }
    lines.push(
        Line::check("polar.identity.random", failure.is_none())
            .kv("samples", samples)
            .kv("field", "gf2^2")
            .witness("sample", || failure.unwrap_or_default().to_string()),
    );
    lines
}

fn sym2(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    for k in opts.ks(&[1, 2]) {
        with_gf2k!(k, F => {
            lines.push(Line::info("sym2.field").kv("field", F::field_name()));
            for n in opts.ns(5) {
                let r = sym2_sequence_report::<F>(n);
                lines.push(
                    Line::check("sym2.twist.dim", r.frobenius_twist_dim == n).kv("n", n).kv("dim", r.frobenius_twist_dim),
                );
                lines.push(
                    Line::check("sym2.exact", r.kernel_is_twist && r.projection_rank == r.lambda2_dim)
                        .kv("n", n)
                        .kv("sym2", r.sym2_dim)
                        .kv("lambda2", r.lambda2_dim),
                );
                lines.push(Line::check("sym2.tensor.exact", r.tensor_sequence_exact).kv("n", n).kv("s2", r.s2_dim));
                lines.push(Line::check("sym2.s2-image", r.s2_image_is_twist).kv("n", n));
            }
        });
    }
    lines
}

fn bracket_line<F: Field>(id: &str, g: &LieSubalgebra<F>) -> Line {
    let failure = g.bracket_failure();
    let d = g.dim();
    Line::check(id, failure.is_none())
        .kv("pairs", d * d.saturating_sub(1) / 2)
        .witness("pair", || failure.map(|(i, j)| format!("{i},{j}")).unwrap_or_default())
}

fn family_line<F: Field>(id: &str, kind: FamilyKind, g: &LieSubalgebra<F>) -> Line {
    let r = shape_equivalence(kind, g).expect("matching size");
    Line::check(id, r.equal)
        .kv("family", r.family_dim)
        .kv("algebra", r.algebra_dim)
        .witness("outside", || r.first_outside.map(|i| kind.parameter_name(i)).unwrap_or_default())
}

fn lie(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    let k = opts.k.unwrap_or(1);
    with_gf2k!(k, F => {
        lines.push(Line::info("lie.field").kv("field", F::field_name()));
        let so8 = lie_algebra(&so8_form::<F>(), LieVariant::Smooth).expect("nondegenerate");
        let so7 = lie_algebra(&so7_form::<F>(), LieVariant::Smooth).expect("nondegenerate");
        let naive = lie_algebra(&so7_form::<F>(), LieVariant::SchemeTangent).expect("nondegenerate");
        let naive8 = lie_algebra(&so8_form::<F>(), LieVariant::SchemeTangent).expect("nondegenerate");
        lines.push(Line::check("lie.so8.dim", so8.dim() == 28).kv("dim", so8.dim()));
        lines.push(Line::check("lie.so8.scheme.dim", naive8 == so8).kv("dim", naive8.dim()));
        lines.push(Line::check("lie.so7.dim", so7.dim() == 21).kv("dim", so7.dim()));
        lines.push(Line::check("lie.so7.scheme.dim", naive.dim() == 22).kv("dim", naive.dim()));
        let e55 = Matrix::<F>::from_fn(7, 7, |i, j| if i == 4 && j == 4 { F::one() } else { F::zero() });
        let sum = so7
            .space()
            .sum(&Subspace::from_vectors(49, [e55.entries().to_vec()]).expect("length 49"))
            .expect("same ambient");
        lines.push(
            Line::check("lie.so7.scheme.extra", so7.is_subalgebra_of(&naive) && !so7.contains(&e55) && sum == *naive.space())
                .kv("direction", "E55"),
        );
        lines.push(bracket_line("lie.so8.bracket", &so8));
        lines.push(bracket_line("lie.so7.bracket", &so7));
        lines.push(bracket_line("lie.so7.scheme.bracket", &naive));
        lines.push(family_line("lie.so8.family", FamilyKind::So8, &so8));
        lines.push(family_line("lie.so7.family", FamilyKind::So7, &so7));
        // the variant with plain transposes in the (x3, x4) blocks is reported, not asserted
        let printed = shape_equivalence(FamilyKind::So7PlainTranspose, &so7).expect("matching size");
        let mut line = Line::info("lie.so7.plain-transpose-family").kv("equal", printed.equal);
        if let Some(i) = printed.first_outside {
            line = line.kv("outside", FamilyKind::So7PlainTranspose.parameter_name(i));
        }
        lines.push(line);
        // polarizing x3 x4 couples (x3, x4) antidiagonally; an identity block there
        // would put ones on the diagonal, which no polar form can have
        let beta = so7_form::<F>().polarize();
        let g = beta.gram();
        let antidiagonal = g[(2, 2)].is_zero() && g[(3, 3)].is_zero() && g[(2, 3)].is_one() && g[(3, 2)].is_one();
        let identity_block = Matrix::from_fn(7, 7, |i, j| match (i, j) {
            (2, 2) | (3, 3) => F::one(),
            (2, 3) | (3, 2) => F::zero(),
            _ => g[(i, j)],
        });
        let identity_alternating = BilinearForm::from_gram(identity_block).is_alternating();
        lines.push(
            Line::check("lie.so7.gram", antidiagonal && beta.is_alternating() && !identity_alternating)
                .kv("coupling", "antidiagonal")
                .kv("identity_block_alternating", identity_alternating),
        );
    });
    // random family members over GF(4) lie in the computed algebras, and so do their brackets
    let mut rng = opts.rng(2);
    let g8 = lie_algebra(&so8_form::<Gf4>(), LieVariant::Smooth).expect("nondegenerate");
    let g7 = lie_algebra(&so7_form::<Gf4>(), LieVariant::Smooth).expect("nondegenerate");
    let samples = 50;
    let mut failure = None;
    for s in 0..samples {
        for (kind, g) in [(FamilyKind::So8, &g8), (FamilyKind::So7, &g7)] {
            let mut draw = || -> Matrix<Gf4> {
                let p: Vec<Gf4> = (0..kind.parameter_count()).map(|_| random_element(&mut rng)).collect();
                family_matrix(kind, &p).expect("parameter count")
            };
            let (a, b) = (draw(), draw());
            if !(g.contains(&a) && g.contains(&b) && g.contains(&a.bracket(&b))) && failure.is_none() {
                failure = Some(s);
            }
        }
    }
    lines.push(
        Line::check("lie.family.random", failure.is_none())
            .kv("samples", samples)
            .kv("field", "gf2^2")
            .witness("sample", || failure.unwrap_or_default().to_string()),
    );
    lines
}

fn parabolic_suite(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    let k = opts.k.unwrap_or(1);
    with_gf2k!(k, F => {
        for (name, q, kind, expected) in [("so8", so8_form::<F>(), FamilyKind::So8, 19), ("so7", so7_form::<F>(), FamilyKind::So7, 14)] {
            let g = lie_algebra(&q, LieVariant::Smooth).expect("nondegenerate");
            let w = standard_plane::<F>(g.n());
            let p = parabolic(&g, &w).expect("isotropic plane");
            lines.push(Line::check(format!("parabolic.{name}.dim"), p.dim() == expected).kv("dim", p.dim()));
            let other = parabolic_by_intersection(&g, &w).expect("isotropic plane");
            lines.push(Line::check(format!("parabolic.{name}.routes"), other == p));
            let kept: Vec<usize> = (0..kind.parameter_count())
                .filter(|&i| stabilizes(&family_generators::<F>(kind)[i], &w))
                .collect();
            let dropped: Vec<String> = (0..kind.parameter_count())
                .filter(|i| !kept.contains(i))
                .map(|i| kind.parameter_name(i))
                .collect();
            let filtered: Vec<Matrix<F>> = kept.iter().map(|&i| family_generators::<F>(kind)[i].clone()).collect();
            let by_filter = LieSubalgebra::from_matrices(q.clone(), &filtered).expect("n x n");
            lines.push(Line::check(format!("parabolic.{name}.filter"), by_filter == p).kv("dropped", dropped.len()));
            lines.push(Line::info(format!("parabolic.{name}.conditions")).kv("zero", dropped.join(",")));
            lines.push(bracket_line(&format!("parabolic.{name}.bracket"), &p));
        }
    });
    lines
}

fn quotient(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    let k = opts.k.unwrap_or(1);
    with_gf2k!(k, F => {
        for (name, q, dims) in [("so8", so8_form::<F>(), (8, 9)), ("so7", so7_form::<F>(), (6, 7))] {
            let g = lie_algebra(&q, LieVariant::Smooth).expect("nondegenerate");
            let w = standard_plane::<F>(g.n());
            let p = parabolic(&g, &w).expect("isotropic plane");
            let r = quotient_sequence_report(&g, &p, &w).expect("p inside g");
            lines.push(
                Line::check(format!("quotient.{name}.dims"), (r.sub_dim, r.quotient_dim, r.d_dim) == (dims.0, dims.1, 1))
                    .kv("sub", r.sub_dim)
                    .kv("total", r.quotient_dim)
                    .kv("line", r.d_dim),
            );
            lines.push(Line::check(format!("quotient.{name}.hom"), r.hom_dim == dims.0 && r.sub_is_full_hom).kv("dim", r.hom_dim));
            lines.push(Line::check(format!("quotient.{name}.kernel"), r.kernel_is_parabolic));
            lines.push(Line::check(format!("quotient.{name}.d-line"), r.d_line_matches).kv("generator", "e*f+f*e"));
            lines.push(Line::check(format!("quotient.{name}.sequence"), r.passed()));
            // classes: an element outside p in each layer
            let maps = QuotientMaps::new(q.polarize(), &w);
            let classes: Vec<_> = g.basis_matrices().iter().map(|a| maps.classify(a)).collect();
            let hom_layer = classes.iter().any(|c| !c.in_parabolic && c.d_component_is_zero());
            let d_layer = classes.iter().any(|c| !c.d_component_is_zero() && !c.in_hom_layer);
            lines.push(Line::check(format!("quotient.{name}.layers"), hom_layer && d_layer));
        }
    });
    // e'f' + f'e' = det * (ef + fe) for every invertible change of basis of W over GF(4)
    let e = [Gf4::one(), Gf4::zero()];
    let f = [Gf4::zero(), Gf4::one()];
    let base = symmetric_square_tensor(&e, &f);
    let mut changes = 0;
    let mut failure = None;
    for idx in 0..Gf4::ORDER.pow(4) {
        let c: Vec<Gf4> = (0..4).map(|i| Gf4::from_index(idx / Gf4::ORDER.pow(i) % Gf4::ORDER)).collect();
        let det = c[0] * c[3] + c[1] * c[2];
        if det.is_zero() {
            continue;
        }
        changes += 1;
        if symmetric_square_tensor(&c[0..2], &c[2..4]) != base.scale(&det) && failure.is_none() {
            failure = Some(vector(&c));
        }
    }
    lines.push(
        Line::check("quotient.basis-change", failure.is_none())
            .kv("changes", changes)
            .witness("change", || failure.clone().unwrap_or_default()),
    );
    lines
}

/// The forms shipped in `forms/` whose orthogonal groups are enumerated.
pub fn census_forms() -> Vec<(&'static str, QuadraticForm<Gf2>)> {
    let x1sq = QuadraticForm::<Gf2>::square_of_linear(&[Gf2::one()]);
    vec![
        ("H", QuadraticForm::hyperbolic_plane()),
        ("H+H", QuadraticForm::hyperbolic(2)),
        ("x1^2+H", x1sq.direct_sum(&QuadraticForm::hyperbolic_plane()).form),
    ]
}

fn dickson(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    for (name, q) in census_forms() {
        let elements = sharded_elements(&q, opts.threads).expect("n <= 4");
        let expected = match name {
            "H" => Some((2, 1)),
            "H+H" => Some((72, 36)),
            _ => None,
        };
        lines.extend(census_lines(&format!("dickson.{name}"), &q, &elements, expected));
    }
    lines
}

fn isotropic(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    for m in opts.n.map_or_else(|| (1..=4).collect(), |n| vec![n]) {
        let q = QuadraticForm::<Gf2>::hyperbolic(m);
        let closed = (1u64 << (2 * m - 1)) + (1u64 << (m - 1));
        match q.count_isotropic_vectors(true) {
            Ok(count) => lines.push(
                Line::check(format!("isotropic.H^{m}"), count == closed).kv("count", count).kv("closed_form", closed),
            ),
            Err(e) => lines.push(Line::check(format!("isotropic.H^{m}"), false).kv("error", e)),
        }
    }
    for (name, q) in [("so8", so8_form::<Gf2>()), ("so7", so7_form::<Gf2>())] {
        let count = q.count_isotropic_vectors(true).expect("small");
        // so8 is H^4; so7 has 2^6 isotropic vectors (the quadric in P^6 has 63 points)
        let expected = if name == "so8" { 136 } else { 64 };
        lines.push(Line::check(format!("isotropic.{name}"), count == expected).kv("count", count));
    }
    lines
}

fn fiber(opts: &SuiteOptions) -> Vec<Line> {
    let mut lines = Vec::new();
    let det = Sl2Fiber::det_form::<Gf2>();
    let rad = det.radical();
    lines.push(
        Line::check("fiber.sl2.radical", rad == Subspace::from_vectors(3, [Sl2Fiber::identity()]).expect("length 3"))
            .kv("radical", "Id"),
    );
    let beta = det.polarize();
    let trace_ok = (0..8u8).all(|i| {
        (0..8u8).all(|j| {
            let v: Vec<Gf2> = (0..3).map(|b| Gf2::from_index(usize::from(i >> b & 1))).collect();
            let w: Vec<Gf2> = (0..3).map(|b| Gf2::from_index(usize::from(j >> b & 1))).collect();
            beta.eval(&v, &w) == Sl2Fiber::trace_pairing(&v, &w)
        })
    });
    lines.push(Line::check("fiber.sl2.trace", trace_ok));
    let pair = build_adjoint_pair::<Gf2>();
    let psi_expected = Matrix::from_rows(vec![
        vec![Gf2::zero(), Gf2::zero(), Gf2::zero()],
        vec![Gf2::zero(), Gf2::zero(), Gf2::one()],
    ]);
    lines.push(
        Line::check("fiber.sl2.adjoint", pair.adjoint_defect(&det).is_none() && pair.psi == psi_expected)
            .kv("psi", "(0,c)"),
    );
    lines.push(Line::check("fiber.sl2.isotropic-image", pair.image_is_isotropic(&det)));
    lines.push(Line::check("fiber.sl2.q-square", pair.q_is_square_of_linear()).kv("q", "x1^2"));
    lines.push(Line::check("fiber.so7.form", *FiberModel::<Gf2>::new(ModelKind::So7, 0).form() == so7_form()));
    lines.push(Line::check("fiber.so8-hat.form", *FiberModel::<Gf2>::new(ModelKind::So8Hat, 0).form() == so8_form()));

    for kind in ModelKind::ALL {
        for pad in 0..=opts.n.unwrap_or(2).min(2) {
            let id = format!("fiber.{kind}.m{pad}");
            let over_k = FiberModel::<RationalFunction>::new(kind, pad);
            let nd = verify_nondegenerate_twist(&over_k, &RationalFunction::t(), None);
            lines.push(Line::check(format!("{id}.nondegenerate"), over_k.form().is_nondegenerate() && nd.passed()).kv("n", over_k.n()));
            let p = over_k.pair();
            lines.push(Line::check(
                format!("{id}.adjoint"),
                p.adjoint_defect(over_k.middle_form()).is_none() && p.psi_after_phi().is_zero(),
            ));
            let model = FiberModel::<Tower>::new(kind, pad);
            let r = verify_twist_identity(&model, &Tower::s());
            lines.push(
                Line::check(format!("{id}.twist"), r.passed)
                    .witness("monomial", || r.first_difference.as_ref().map(|d| monomial(d.0, d.1)).unwrap_or_default()),
            );
            lines.push(Line::check(format!("{id}.involution"), r.involution));
            let pc = phi_class_in_quotient(&FiberModel::<Gf2>::new(kind, pad), None).expect("nondegenerate");
            lines.push(
                Line::check(format!("{id}.phi-class"), pc.passed() && pc.class.as_ref().is_some_and(|c| !c.is_zero()))
                    .kv("algebra", pc.algebra_dim)
                    .kv("parabolic", pc.parabolic_dim),
            );
        }
    }

    // specializations s in GF(2^k), t = s^2
    let mut cases = 0;
    let mut failure = None;
    fn sweep<const K: usize>(cases: &mut usize, failure: &mut Option<String>) {
        for s in Gf2k::<K>::elements() {
            for kind in ModelKind::ALL {
                *cases += 1;
                let r = verify_twist_identity(&FiberModel::<Gf2k<K>>::new(kind, 0), &s);
                if !(r.passed && r.involution) && failure.is_none() {
                    *failure = Some(format!("k={K},s={s},{kind}"));
                }
            }
        }
    }
    sweep::<1>(&mut cases, &mut failure);
    sweep::<2>(&mut cases, &mut failure);
    sweep::<3>(&mut cases, &mut failure);
    lines.push(
        Line::check("fiber.twist.sweep", failure.is_none())
            .kv("fields", "gf2^1,gf2^2,gf2^3")
            .kv("cases", cases)
            .witness("case", || failure.clone().unwrap_or_default()),
    );

    // a non-adjoint psi must break the identity
    let w = Gf4::from_index(2);
    let perturbed = verify_twist_identity(&FiberModel::<Gf4>::with_psi_scale(ModelKind::So7, 0, &w), &Gf4::one());
    let witness = perturbed.first_difference.as_ref().map(|d| monomial(d.0, d.1));
    lines.push(
        Line::check("fiber.twist.perturbed-psi", !perturbed.passed && witness.as_deref() == Some("x2*x4"))
            .kv("detected", witness.unwrap_or_else(|| "none".into())),
    );
    let zero = phi_class_in_quotient(&FiberModel::<Gf2>::new(ModelKind::So7, 0), Some(&Matrix::zeros(3, 2)))
        .expect("nondegenerate");
    lines.push(Line::check("fiber.phi-class.zero", zero.class.as_ref().is_some_and(|c| c.is_zero())));
    let canonical = phi_class_in_quotient(&FiberModel::<Gf2>::new(ModelKind::So7, 0), None).expect("nondegenerate");
    lines.push(Line::check(
        "fiber.d-layer",
        canonical.d_layer_class.as_ref().is_some_and(|c| !c.d_component_is_zero() && !c.in_hom_layer),
    ));
    lines
}

fn descent() -> Vec<Line> {
    let mut lines = vec![Line::info("descent.scope").kv("note", DESCENT_SCOPE)];
    let t = RationalFunction::t();
    let over_k = FiberModel::<RationalFunction>::new(ModelKind::So7, 0);
    let nd = verify_nondegenerate_twist(&over_k, &t, None);
    lines.push(
        Line::check("descent.K.nondegenerate", nd.passed() && nd.radical_dim == 1)
            .kv("radical", nd.radical_generator.as_deref().map(unit_sum).unwrap_or_else(|| "none".into()))
            .kv("value", nd.value_on_radical.as_ref().map(|v| v.pretty()).unwrap_or_else(|| "none".into())),
    );
    lines.push(Line::check("descent.K.polarization", nd.polar_equal));
    let bad_q = QuadraticForm::from_monomials(2, &[(0, 1)]);
    let flagged = verify_nondegenerate_twist(&over_k, &t, Some(&bad_q));
    lines.push(
        Line::check("descent.K.non-square-q", !flagged.polar_equal)
            .kv("changed", flagged.first_polar_difference.map(|(i, j)| monomial(i, j)).unwrap_or_else(|| "none".into())),
    );
    let r = descent_obstruction(&over_k, &t);
    lines.push(Line::check(
        "descent.K.no-sqrt-t",
        is_square(&t).is_none() && r.lambda_squared == Some(t.clone()) && r.lambda.is_none(),
    ));
    let t2 = t.clone() * t.clone();
    let r2 = descent_obstruction(&over_k, &t2);
    lines.push(
        Line::check("descent.K.t-squared", r2.lambda == Some(t.clone()) && r2.graph_isotropic == Some(true))
            .kv("lambda", r2.lambda.as_ref().map(|l| l.pretty()).unwrap_or_else(|| "none".into())),
    );
    let over_kp = FiberModel::<Tower>::new(ModelKind::So7, 0);
    let rp = descent_obstruction(&over_kp, &Tower::t());
    lines.push(
        Line::check("descent.Kprime.witness", rp.lambda == Some(Tower::s()))
            .kv("lambda", rp.lambda.as_ref().map(|l| l.pretty()).unwrap_or_else(|| "none".into())),
    );
    lines.push(Line::check("descent.Kprime.isotropic", rp.graph_isotropic == Some(true) && !rp.w_isotropic));
    let tw = verify_twist_identity(&over_kp, &Tower::s());
    lines.push(
        Line::check("descent.Kprime.twist", tw.passed)
            .witness("monomial", || tw.first_difference.as_ref().map(|d| monomial(d.0, d.1)).unwrap_or_default()),
    );
    lines.push(Line::check("descent.Kprime.involution", tw.involution));
    let added = twisted_form(&over_kp, &Tower::t(), None);
    lines.push(Line::check("descent.Kprime.added-term", *added.coeff(0, 0) == Tower::t()).kv("term", "t*x1^2"));
    lines
}
