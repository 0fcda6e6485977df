//! Algebraic laws as checks returning a description of the first failure.

use upto_core::{LMonoid, Matrix, Semiring, Vector};

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub type Check = Result<(), String>;

pub fn semiring<S: Semiring>(a: &S, b: &S, c: &S) -> Check {
    ensure!(
        a.combine(b) == b.combine(a),
        "⊕ not commutative on {a}, {b}"
    );
    ensure!(
        a.combine(b).combine(c) == a.combine(&b.combine(c)),
        "⊕ not associative on {a}, {b}, {c}"
    );
    ensure!(
        a.times(b).times(c) == a.times(&b.times(c)),
        "⊗ not associative on {a}, {b}, {c}"
    );
    ensure!(
        a.times(&b.combine(c)) == a.times(b).combine(&a.times(c)),
        "left distributivity fails on {a}, {b}, {c}"
    );
    ensure!(
        b.combine(c).times(a) == b.times(a).combine(&c.times(a)),
        "right distributivity fails on {a}, {b}, {c}"
    );
    ensure!(a.combine(&S::zero()) == *a, "0 is not neutral for {a}");
    ensure!(
        a.times(&S::one()) == *a && S::one().times(a) == *a,
        "1 is not neutral for {a}"
    );
    ensure!(
        a.times(&S::zero()).is_zero() && S::zero().times(a).is_zero(),
        "0 does not annihilate {a}"
    );
    ensure!(
        !a.times(b).is_zero() || a.is_zero() || b.is_zero(),
        "integrality fails on {a}, {b}"
    );
    Ok(())
}

pub fn residuation<S: LMonoid>(a: &S, b: &S, x: &S) -> Check {
    ensure!(
        a.times(x).leq(b) == x.leq(&a.residuum(b)),
        "Galois connection fails on a={a}, b={b}, x={x}"
    );
    ensure!(
        a.times(&a.residuum(b)).leq(b),
        "a·(a→b) ⋢ b on a={a}, b={b}"
    );
    ensure!(
        a.leq(b) == (a.combine(b) == *b),
        "⊑ disagrees with ⊕ on {a}, {b}"
    );
    ensure!(
        a.meet(b).leq(a) && a.meet(b).leq(b),
        "meet is not a lower bound of {a}, {b}"
    );
    ensure!(a.leq(&S::top()), "{a} is above top");
    Ok(())
}

pub fn vector_residuation<S: LMonoid>(v: &Vector<S>, w: &Vector<S>, s: &S) -> Check {
    let r = v.residuum(w);
    let meet = v
        .iter()
        .zip(w.iter())
        .fold(S::top(), |acc, (x, y)| acc.meet(&x.residuum(y)));
    ensure!(
        r == meet,
        "v→w = {r} is not the meet {meet} of componentwise residua for v={v}, w={w}"
    );
    ensure!(
        v.scale(s).leq(w) == s.leq(&r),
        "vector Galois connection fails for v={v}, w={w}, s={s}"
    );
    ensure!(v.scale(&r).leq(w), "v·(v→w) ⋢ w for v={v}, w={w}");
    Ok(())
}

pub fn linearity<S: Semiring>(m: &Matrix<S>, v: &Vector<S>, w: &Vector<S>, s: &S) -> Check {
    ensure!(
        m.apply(&v.combine(w)) == m.apply(v).combine(&m.apply(w)),
        "M(v ⊕ w) ≠ Mv ⊕ Mw for v={v}, w={w}"
    );
    ensure!(
        m.apply(&v.scale(s)) == m.apply(v).scale(s),
        "M(s·v) ≠ s·Mv for v={v}, s={s}"
    );
    Ok(())
}
