//! The verification checks. Each compares independently computed values and
//! records one report item per comparison.

use std::sync::Mutex;

use anyhow::Result;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use pseudoroot::combinatorics::{enumerate_family, family_counts};
use pseudoroot::freealgebra::words_of_degree;
use pseudoroot::linalg::Echelon;
use pseudoroot::presentations::{
    alternating_tail, dual_basis_words, dual_relation_sets, make_v, relations_q,
};
use pseudoroot::series::{
    cor49_series, dual_dim_count, series_from_counts, tensor_algebra_series, theorem1_series,
    theorem2_series,
};
use pseudoroot::{
    pairing, vee, Family, Field, QuadraticPresentation, Rational, Series, Span, SubsetMask, Word,
};

use crate::cache::{self, Cache};
use crate::dims::{self, Algebra};
use crate::field::FieldMode;
use crate::report::{Params, VerificationReport};

/// Words per degree checked exhaustively by `normal-form`; larger degrees are sampled.
pub const EXHAUSTIVE_WORDS: usize = 20_000;
pub const SAMPLED_WORDS: usize = 5_000;
/// Truncation order for the closed-form series identities.
pub const SERIES_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize)]
pub enum Check {
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "theorem2")]
    Theorem2,
    #[value(name = "dual-presentation")]
    DualPresentation,
    #[value(name = "normal-form")]
    NormalForm,
    #[value(name = "section4")]
    Section4,
    #[value(name = "lemma62")]
    Lemma62,
    #[value(name = "lemma63")]
    Lemma63,
    #[value(name = "koszul")]
    Koszul,
    #[value(name = "basis")]
    Basis,
    #[value(name = "cor65")]
    Cor65,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Theorem1,
        Check::Theorem2,
        Check::DualPresentation,
        Check::NormalForm,
        Check::Section4,
        Check::Lemma62,
        Check::Lemma63,
        Check::Koszul,
        Check::Basis,
        Check::Cor65,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::DualPresentation => "dual-presentation",
            Check::NormalForm => "normal-form",
            Check::Section4 => "section4",
            Check::Lemma62 => "lemma62",
            Check::Lemma63 => "lemma63",
            Check::Koszul => "koszul",
            Check::Basis => "basis",
            Check::Cor65 => "cor65",
        }
    }
}

pub struct Context<'a> {
    pub n: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub field: FieldMode,
    pub cache: Option<&'a Mutex<Cache>>,
}

impl Context<'_> {
    pub fn params(&self) -> Params {
        Params {
            n: self.n,
            max_degree: self.max_degree,
            field: self.field.to_string(),
            exact: self.field.is_exact(),
            seed: self.seed,
        }
    }

    /// Engine dimensions for degrees `0..=max_degree`, served from the cache when complete.
    pub fn engine_dims<S: Field>(&self, algebra: Algebra, max_degree: usize) -> Result<Vec<u128>> {
        let keys: Vec<String> = (0..=max_degree)
            .map(|i| cache::key(algebra, self.n, i, self.field))
            .collect();
        if let Some(c) = self.cache {
            let c = c.lock().expect("cache lock");
            let hits: Option<Vec<u128>> = keys.iter().map(|k| c.get(k)).collect();
            if let Some(hits) = hits {
                return Ok(hits);
            }
        }
        let fresh = dims::engine_dims::<S>(algebra, self.n, max_degree)?;
        if let Some(c) = self.cache {
            let mut c = c.lock().expect("cache lock");
            for (k, &v) in keys.into_iter().zip(&fresh) {
                c.insert(k, v);
            }
        }
        Ok(fresh)
    }
}

pub fn run_check<S: Field>(check: Check, ctx: &Context<'_>) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(check.name(), ctx.params());
    match check {
        Check::Theorem1 => theorem1::<S>(ctx, &mut r)?,
        Check::Theorem2 => theorem2::<S>(ctx, &mut r)?,
        Check::DualPresentation => dual_presentation::<S>(ctx, &mut r)?,
        Check::NormalForm => normal_form::<S>(ctx, &mut r)?,
        Check::Section4 => section4(ctx, &mut r)?,
        Check::Lemma62 => lemma62::<S>(ctx, &mut r)?,
        Check::Lemma63 => lemma63::<S>(ctx, &mut r)?,
        Check::Koszul => koszul::<S>(ctx, &mut r)?,
        Check::Basis => basis::<S>(ctx, &mut r)?,
        Check::Cor65 => cor65::<S>(ctx, &mut r)?,
    }
    Ok(r)
}

fn render(s: &Series) -> String {
    s.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn integer_coeffs(s: &Series) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

fn theorem1<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let top = ctx.max_degree;
    let closed = integer_coeffs(&theorem1_series(ctx.n, top));
    let strings = family_counts(ctx.n, &Family::Y, top)?;
    let q = ctx.engine_dims::<S>(Algebra::Qn, top)?;
    let x = ctx.engine_dims::<S>(Algebra::Xn, top)?;
    for i in 0..=top {
        r.compare(
            format!("degree {i}: Y-string count"),
            &closed[i],
            strings[i],
        );
        r.compare(format!("degree {i}: dim Q_n"), &closed[i], q[i]);
        r.compare(format!("degree {i}: dim X_n"), &closed[i], x[i]);
    }
    Ok(())
}

fn theorem2<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let top = ctx.max_degree;
    let closed = integer_coeffs(&theorem2_series(ctx.n, top));
    let words = dims::string_dims(Algebra::QnDual, ctx.n, top)?;
    let dual = ctx.engine_dims::<S>(Algebra::QnDual, top)?;
    for i in 0..=top {
        r.compare(
            format!("degree {i}: binomial sum"),
            &closed[i],
            dual_dim_count(ctx.n, i),
        );
        r.compare(
            format!("degree {i}: S(A:B) word count"),
            &closed[i],
            words[i],
        );
        r.compare(
            format!("degree {i}: dim of the quadratic dual"),
            &closed[i],
            dual[i],
        );
    }
    let total: u128 = (0..=ctx.n).map(|i| dual_dim_count(ctx.n, i)).sum();
    let series_total: Rational = theorem2_series::<Rational>(ctx.n, ctx.n)
        .coeffs()
        .iter()
        .sum();
    r.compare("total dimension", series_total, total);
    Ok(())
}

fn dual_presentation<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let n = ctx.n;
    let q = QuadraticPresentation::<S>::qn(n)?;
    let d = q.num_generators();
    let perp = q.koszul_dual();
    let sets = dual_relation_sets::<S>(n)?;
    let explicit = QuadraticPresentation::<S>::qn_dual_explicit(n)?;
    let expected = d * d - q.relation_rank();
    r.compare("dim span(S1..S4)", expected, explicit.relation_rank());
    r.compare(
        "dim of the annihilator of Q",
        expected,
        perp.relation_rank(),
    );

    let qs = relations_q::<S>(n)?.elements;
    let nonzero = sets
        .all()
        .iter()
        .flat_map(|s| qs.iter().map(move |x| (x, s)))
        .filter(|(x, s)| pairing(x, s).map(|p| !p.is_zero()).unwrap_or(true))
        .count();
    r.compare("pairings <Q, S> that are nonzero", 0, nonzero);

    let mut span_s = Span::new(pseudoroot::Side::Dual);
    for s in explicit.relations() {
        span_s.add(s)?;
    }
    let mut span_perp = Span::new(pseudoroot::Side::Dual);
    for s in perp.relations() {
        span_perp.add(s)?;
    }
    let mut missing = 0;
    for s in perp.relations() {
        missing += usize::from(!span_s.contains(s)?);
    }
    r.compare("annihilator basis vectors outside span(S)", 0, missing);
    let mut outside = 0;
    for s in explicit.relations() {
        outside += usize::from(!span_perp.contains(s)?);
    }
    r.compare("elements of S outside the annihilator", 0, outside);
    Ok(())
}

fn normal_form<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let x = QuadraticPresentation::<S>::xn(ctx.n)?;
    let tower = x.tower(ctx.max_degree)?;
    let labels = x.labels().to_vec();
    for degree in 0..=ctx.max_degree {
        let total = labels
            .len()
            .checked_pow(degree as u32)
            .unwrap_or(usize::MAX);
        let (words, how) = if total <= EXHAUSTIVE_WORDS {
            (words_of_degree(&labels, degree), "all")
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(degree as u64));
            let sample = (0..SAMPLED_WORDS)
                .map(|_| {
                    Word::new(
                        (0..degree)
                            .map(|_| labels[rng.gen_range(0..labels.len())])
                            .collect(),
                    )
                })
                .collect();
            (sample, "sampled")
        };
        let mut mismatches = 0usize;
        for w in &words {
            let normal = Word::from(&vee(&w.to_block_string())?);
            if tower.word_coordinates(w)? != tower.word_coordinates(&normal)? {
                mismatches += 1;
            }
        }
        r.compare(
            format!(
                "degree {degree}: {} {how} words vs their normal forms, mismatches",
                words.len()
            ),
            0,
            mismatches,
        );
    }
    Ok(())
}

fn section4(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let n = ctx.n;
    let t_order = ctx.max_degree;
    r.compare(
        format!("recursive series = closed form to order {SERIES_ORDER}"),
        render(&theorem1_series(n, SERIES_ORDER)),
        render(&cor49_series::<Rational>(n, SERIES_ORDER)),
    );
    if n == 0 {
        return Ok(());
    }
    let counts =
        |f: Family| -> Result<Series> { Ok(series_from_counts(&family_counts(n, &f, t_order)?)) };
    let poly = |c: &[i64]| Series::from_integers(c, t_order);
    let one = Series::one(t_order);
    let a = counts(Family::YHat1)?;
    let b = counts(Family::Y1)?;
    let previous = theorem1_series::<Rational>(n - 1, t_order);
    let t = poly(&[0, 1]);

    r.compare(
        "Y(1^) counts = series of Q_{n-1}",
        render(&previous),
        render(&a),
    );
    r.compare(
        "1/b = 1/H(Q_{n-1}) - t",
        render(&(&previous.invert()? - &t)),
        render(&b.invert()?),
    );
    r.compare(
        "1/b = 1/a - t",
        render(&(&a.invert()? - &t)),
        render(&b.invert()?),
    );

    for head in SubsetMask::all_nonempty(n).filter(|h| h.contains(1)) {
        for len in 1..=head.len() {
            let mut expected = b.shift(len);
            for _ in 0..n - head.len() {
                expected = &expected * &poly(&[1, -1]);
            }
            r.compare(
                format!("U({head}:{len}) counts"),
                render(&expected),
                render(&counts(Family::U { head, len })?),
            );
        }
    }
    for tail in std::iter::once(SubsetMask::EMPTY)
        .chain(SubsetMask::all_nonempty(n))
        .filter(|x| !x.contains(1))
    {
        r.compare(
            format!("Z({tail}) counts"),
            render(&b.shift(1)),
            render(&counts(Family::Z { tail })?),
        );
    }
    let w = counts(Family::W)?;
    let a1 = &a - &one;
    let expected_w = &(&a1 * &(&b - &one)) - &(&b.shift(1) * &a1);
    r.compare("W counts", render(&expected_w), render(&w));
    let product = &(&a * &tensor_algebra_series(&w)?) * &b;
    r.compare(
        "a * 1/(1 - H(W)) * b",
        render(&theorem1_series(n, t_order)),
        render(&product),
    );
    Ok(())
}

/// Pairs `(A, B)` with `B ⊆ A ⊆ {1..n}` and `|B| >= 3`.
fn large_pairs(n: usize) -> Vec<(SubsetMask, SubsetMask)> {
    let mut out = Vec::new();
    for a in SubsetMask::all_nonempty(n) {
        for b in a.subsets() {
            if b.len() >= 3 {
                out.push((a, b));
            }
        }
    }
    out
}

fn lemma62<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let dual = QuadraticPresentation::<S>::qn(ctx.n)?.koszul_dual();
    let mut positioned: Vec<Vec<Vec<pseudoroot::FreeElement<S>>>> = Vec::new();
    for (a, b) in large_pairs(ctx.n) {
        let k = b.len();
        if k - 1 > ctx.max_degree {
            continue;
        }
        let tail = alternating_tail::<S>(ctx.n, a, b)?;
        r.compare(
            format!("A={a}, B={b}: tail is nonzero"),
            true,
            !tail.is_zero(),
        );
        while positioned.len() <= k {
            let deg = positioned.len();
            let spaces = if deg >= 3 {
                (0..=deg - 3)
                    .map(|m| dual.positioned_relations(deg - 1, m))
                    .collect::<pseudoroot::Result<Vec<_>>>()?
            } else {
                Vec::new()
            };
            positioned.push(spaces);
        }
        for (m, space) in positioned[k].iter().enumerate() {
            let mut nonzero = 0usize;
            for u in space {
                if !pairing(&tail, u)?.is_zero() {
                    nonzero += 1;
                }
            }
            r.compare(
                format!("A={a}, B={b}, position {m}: nonzero pairings with the dual relations"),
                0,
                nonzero,
            );
        }
    }
    Ok(())
}

fn lemma63<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let q = QuadraticPresentation::<S>::qn(ctx.n)?;
    let mut spans: Vec<Vec<Span<S>>> = Vec::new();
    for (a, b) in large_pairs(ctx.n) {
        let k = b.len();
        if k > ctx.max_degree {
            continue;
        }
        let v = make_v::<S>(ctx.n, a, b)?;
        while spans.len() <= k {
            let deg = spans.len();
            let mut level = Vec::new();
            if deg >= 2 {
                for m in 0..=deg - 2 {
                    let mut span = Span::new(pseudoroot::Side::Primal);
                    for e in q.positioned_relations(deg, m)? {
                        span.add(&e)?;
                    }
                    level.push(span);
                }
            }
            spans.push(level);
        }
        for (m, span) in spans[k].iter().enumerate() {
            r.compare(
                format!("A={a}, B={b}: V(A:B) in V^{m} R V^{}", k - 2 - m),
                true,
                span.contains(&v)?,
            );
        }
    }
    Ok(())
}

fn koszul<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let n = ctx.n;
    let h = theorem1_series::<Rational>(n, SERIES_ORDER);
    let h_dual = theorem2_series::<Rational>(n, SERIES_ORDER);
    r.compare(
        format!("closed forms: H(t) H^!(-t) to order {SERIES_ORDER}"),
        render(&Series::one(SERIES_ORDER)),
        render(&(&h * &h_dual.substitute_neg_t())),
    );
    let top = ctx.max_degree;
    let q = ctx.engine_dims::<S>(Algebra::Qn, top)?;
    let qd = ctx.engine_dims::<S>(Algebra::QnDual, top)?;
    let product = &series_from_counts::<Rational>(&q)
        * &series_from_counts::<Rational>(&qd).substitute_neg_t();
    r.compare(
        format!("computed dims: H(t) H^!(-t) to order {top}"),
        render(&Series::one(top)),
        render(&product),
    );
    let p = QuadraticPresentation::<S>::qn(n)?;
    let d = p.num_generators();
    r.compare(
        "dim R + dim R^perp",
        d * d,
        p.relation_rank() + p.koszul_dual().relation_rank(),
    );
    Ok(())
}

fn basis<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let q = QuadraticPresentation::<S>::qn(ctx.n)?;
    let tower = q.tower(ctx.max_degree)?;
    for degree in 0..=ctx.max_degree {
        let ys = enumerate_family(ctx.n, &Family::Y, degree)?;
        let mut span = Echelon::new();
        for s in &ys {
            span.insert(&tower.word_coordinates(&Word::from(s))?);
        }
        r.compare(
            format!("Q_n degree {degree}: number of Y words"),
            tower.dim(degree),
            ys.len(),
        );
        r.compare(
            format!("Q_n degree {degree}: rank of their images"),
            tower.dim(degree),
            span.rank(),
        );
    }
    let dual = q.koszul_dual();
    let dual_tower = dual.tower(ctx.max_degree)?;
    let words = dual_basis_words(ctx.n)?;
    for degree in 1..=ctx.max_degree {
        let these: Vec<_> = words.iter().filter(|w| w.degree() == degree).collect();
        let mut span = Echelon::new();
        for w in &these {
            span.insert(&dual_tower.word_coordinates(&w.word)?);
        }
        let dim = dual_tower.dim(degree);
        r.compare(
            format!("dual degree {degree}: number of S(A:B) words"),
            dim,
            these.len(),
        );
        r.compare(
            format!("dual degree {degree}: rank of their images"),
            dim,
            span.rank(),
        );
    }
    Ok(())
}

fn cor65<S: Field>(ctx: &Context<'_>, r: &mut VerificationReport) -> Result<()> {
    let top = ctx.max_degree;
    let dual = ctx.engine_dims::<S>(Algebra::QnDual, top)?;
    let gr = ctx.engine_dims::<S>(Algebra::GrDual, top)?;
    let explicit = QuadraticPresentation::<S>::qn_dual_explicit(ctx.n)?.dims(top)?;
    for i in 0..=top {
        r.compare(format!("degree {i}: graded dual vs dual"), dual[i], gr[i]);
        r.compare(
            format!("degree {i}: explicit dual presentation vs dual"),
            dual[i],
            explicit[i],
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, max_degree: usize) -> Context<'static> {
        Context {
            n,
            max_degree,
            seed: 0,
            field: FieldMode::Rational,
            cache: None,
        }
    }

    #[test]
    fn every_check_passes_for_small_n() {
        for n in 0..=2 {
            for check in Check::ALL {
                let r = run_check::<Rational>(check, &ctx(n, 3)).unwrap();
                assert!(
                    r.pass,
                    "n={n} {check:?}: {:?}",
                    r.failed_items().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn lemma_checks_have_items_at_n3() {
        let r = run_check::<Rational>(Check::Lemma62, &ctx(3, 3)).unwrap();
        assert!(r.pass);
        assert_eq!(r.items.len(), 2);
        let r = run_check::<Rational>(Check::Lemma63, &ctx(3, 3)).unwrap();
        assert!(r.pass);
        assert_eq!(r.items.len(), 2);
    }

    #[test]
    fn sampled_normal_form_is_reproducible() {
        let a = run_check::<pseudoroot::Fp<32003>>(
            Check::NormalForm,
            &Context {
                seed: 7,
                field: FieldMode::Prime(32003),
                ..ctx(4, 4)
            },
        )
        .unwrap();
        let b = run_check::<pseudoroot::Fp<32003>>(
            Check::NormalForm,
            &Context {
                seed: 7,
                field: FieldMode::Prime(32003),
                ..ctx(4, 4)
            },
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.pass);
        assert!(a.items[4].desc.contains("sampled"));
    }
}
