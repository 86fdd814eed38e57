//! Acceptance run: one `PASS`/`FAIL` line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p rtq --test acceptance`.

#![allow(clippy::needless_range_loop)]

use std::time::{Duration, Instant};

use rtq::arcdiagram::{build, BasisOrder};
use rtq::qlaurent::{multinomial_by_inversions, quantum_multinomial, verify_pochhammer_identity, LaurentPoly3};
use rtq::quiverforms::{closed_form_n1, compute_q_conf2, compute_quiver_on, reduce_almost, QuiverData};
use rtq::seriescheck::{compare_up_to_shift, expand_almost_form, expand_quiver_form};
use rtq::skeinoracle::{poincare, specialize_t};
use rtq::tanglecore::{Fraction, Role};
use rtq::windings::{
    loop_gamma_pair, loop_hat, loop_s, loop_s_hat, loop_tilde, psi, rectangle_move, winding,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn arc_data(s: &str, reduced: bool) -> Result<QuiverData, String> {
    let f: Fraction = s.parse().map_err(|e| format!("{e}"))?;
    let d = build(f).map_err(|e| e.to_string())?;
    let full = compute_quiver_on(&d).map_err(|e| e.to_string())?;
    let data = if reduced { reduce_almost(&full, &d).map_err(|e| e.to_string())? } else { full };
    Ok(data.reordered(&d, BasisOrder::Arc))
}

fn timed(limit: Duration, what: &str, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let r = f()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))?;
    Ok(format!("{r} in {:.3}s", took.as_secs_f64()))
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), "10/3", || {
        let q = arc_data("10/3", true)?;
        ensure(q.k == [1, 1, 1, 1, 1, 0, 0, 0], || format!("K = {:?}", q.k))?;
        ensure(q.s == [5, 3, 2, 3, 1, 2, 1, 0], || format!("S = {:?}", q.s))?;
        ensure(q.a == [2, 2, 0, 0, 0, 2, 0, 0], || format!("A = {:?}", q.a))?;
        ensure(q.t.iter().zip(&q.s).all(|(t, s)| *t == -s), || "T != -S".into())?;
        // Reference table; its (6,5) entry reads 1 where symmetry with (5,6) requires -1.
        let mut reference = vec![
            vec![0, -2, 0, 1, 0, -2, 0, 0],
            vec![-2, -2, -1, -1, -1, -2, 0, 0],
            vec![0, -1, 1, 1, 0, -1, 1, 0],
            vec![1, -1, 1, 2, 0, -1, 1, 0],
            vec![0, -1, 0, 0, 0, -1, 1, 0],
            vec![-2, -2, -1, -1, 1, -2, -1, -1],
            vec![0, 0, 1, 1, 1, -1, 1, 0],
            vec![0, 0, 0, 0, 0, -1, 0, 0],
        ];
        let mut agree = 0;
        for i in 0..8 {
            for j in 0..8 {
                if (i, j) != (5, 4) {
                    ensure(q.q[i][j] == reference[i][j], || format!("Q[{}][{}] = {}", i + 1, j + 1, q.q[i][j]))?;
                    agree += 1;
                }
            }
        }
        ensure(q.q[5][4] == reference[4][5], || "entry (6,5) disagrees with its transpose".into())?;
        reference[5][4] = -1;
        ensure(q.q == reference, || "Q differs".into())?;
        Ok(format!("K, S, A, T and {agree} reference Q entries exact; (6,5) = -1 by symmetry"))
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(1), "8/1", || {
        let full = arc_data("8/1", false)?;
        ensure(full.s == (0..=8).rev().collect::<Vec<i64>>(), || format!("S = {:?}", full.s))?;
        ensure(full.a.iter().all(|&a| a == 0), || "A != 0".into())?;
        for i in 0..9 {
            for j in 0..9 {
                let m = i.max(j) as i64 + 1;
                let want = if m <= 8 { 8 - m } else { 0 };
                ensure(full.q[i][j] == want, || format!("full Q[{i}][{j}]"))?;
            }
        }
        let red = arc_data("8/1", true)?;
        ensure(red.k == [1, 1, 1, 1, 0] && red.s == [7, 5, 3, 1, 0] && red.a == [0; 5], || {
            format!("reduced K={:?} S={:?}", red.k, red.s)
        })?;
        let want = vec![
            vec![6, 4, 2, 0, 0],
            vec![4, 4, 2, 0, 0],
            vec![2, 2, 2, 0, 0],
            vec![0; 5],
            vec![0; 5],
        ];
        ensure(red.q == want, || format!("reduced Q = {:?}", red.q))?;
        Ok("full 9-index and reduced 5-index data exact (arc order)".into())
    })
}

fn criterion_3() -> Outcome {
    let red = arc_data("7/1", true)?;
    ensure(red.k == [1, 1, 1, 0, 0] && red.s == [6, 4, 2, 1, 0] && red.a == [0; 5], || {
        format!("K={:?} S={:?} A={:?}", red.k, red.s, red.a)
    })?;
    let want = vec![vec![5, 3, 1, 0, 0], vec![3, 3, 1, 0, 0], vec![1, 1, 1, 0, 0], vec![0; 5], vec![0; 5]];
    ensure(red.q == want, || format!("Q = {:?}", red.q))?;
    Ok("reduced 5-index data exact".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=16u64 {
        for reduced in [false, true] {
            let got = arc_data(&format!("{n}/1"), reduced)?;
            let want = closed_form_n1(n, reduced).map_err(|e| e.to_string())?;
            ensure((&got.k, &got.s, &got.a, &got.t, &got.q) == (&want.k, &want.s, &want.a, &want.t, &want.q), || {
                format!("n = {n}, reduced = {reduced}")
            })?;
        }
    }
    Ok("n = 1..16, full and reduced".into())
}

struct Sweep {
    f: Fraction,
    full: QuiverData,
    reduced: QuiverData,
}

fn sweep_data(max: u64) -> Result<Vec<Sweep>, String> {
    Fraction::sweep(max)
        .into_iter()
        .map(|f| {
            let d = build(f).map_err(|e| e.to_string())?;
            let full = compute_quiver_on(&d).map_err(|e| e.to_string())?;
            let reduced = reduce_almost(&full, &d).map_err(|e| e.to_string())?;
            Ok(Sweep { f, full, reduced })
        })
        .collect()
}

fn criterion_5(sweep: &[Sweep]) -> Outcome {
    timed(Duration::from_secs(120), "sweep", || {
        let mut checks = 0;
        for s in sweep {
            for j in 0..=3 {
                let oracle = poincare(s.f, j);
                let expanded = expand_quiver_form(&s.full, j);
                compare_up_to_shift(&oracle, &expanded).map_err(|m| format!("{} j={j}: {m}", s.f))?;
                checks += 1;
            }
        }
        Ok(format!("{checks} (tangle, color) pairs agree up to one shift each"))
    })
}

fn criterion_6(sweep: &[Sweep]) -> Outcome {
    let mut checks = 0;
    for s in sweep {
        for j in 0..=3 {
            ensure(expand_almost_form(&s.reduced, j) == expand_quiver_form(&s.full, j), || {
                format!("{} j={j}", s.f)
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} pairs equal with identity shift"))
}

fn criterion_7() -> Outcome {
    let fractions = Fraction::sweep(12);
    for &f in &fractions {
        let d = build(f).map_err(|e| e.to_string())?;
        let q = compute_quiver_on(&d).map_err(|e| e.to_string())?;
        ensure(q.is_symmetric(), || format!("{f} not symmetric"))?;
        let other = compute_q_conf2(&d).map_err(|e| e.to_string())?;
        ensure(other == q.q, || format!("{f}: routes differ"))?;
    }
    Ok(format!("{} tangles with u+v <= 12, both routes entrywise equal and symmetric", fractions.len()))
}

fn criterion_8() -> Outcome {
    let d52 = build("5/2".parse().unwrap()).map_err(|e| e.to_string())?;
    let e = |e: rtq::windings::LoopError| e.to_string();
    let py = psi(&d52, &[Role::Y], &loop_gamma_pair(&d52, 7, 4).map_err(e)?).map_err(e)?;
    ensure(py == 1, || format!("Ψ_Y(γ_7,4) = {py}"))?;
    let fig: Vec<i64> = [(1, 2), (1, 7), (1, 4), (1, 6)]
        .iter()
        .map(|&(i, j)| loop_tilde(&d52, i, j).and_then(|l| l.phi()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    ensure(fig == [0, 0, 1, 1], || format!("calibration anchor values {fig:?}"))?;
    let s = loop_s(&d52, 1, 2).and_then(|l| l.phi()).map_err(e)?;
    let sh = loop_s_hat(&d52, 1, 2).and_then(|l| l.phi()).map_err(e)?;
    let rect = rectangle_move(&d52, 1, 2).and_then(|l| l.phi()).map_err(e)?;
    ensure((s, sh, rect) == (1, -1, 1), || format!("s={s} ŝ={sh} rectangle={rect}"))?;
    let d = build("10/3".parse().unwrap()).map_err(|e| e.to_string())?;
    // Points 10 and 6 are the second and fourth reduced basis elements in arc order.
    let phi = loop_tilde(&d, 10, 6).and_then(|l| l.phi()).map_err(e)?;
    let pxp = psi(&d, &[Role::XPlus], &loop_gamma_pair(&d, 10, 6).map_err(e)?).map_err(e)?;
    let q = compute_quiver_on(&d).map_err(|e| e.to_string())?;
    let q44 = q.q[5][5];
    ensure((phi, pxp, q44) == (-1, 1, 2), || format!("Φ={phi} Ψ_X+={pxp} Q44={q44}"))?;
    Ok("Ψ_Y=1; Φ=(0,0,1,1); Φ(s)=+1, Φ(ŝ)=-1, rectangle=+1; Φ=-1, Ψ_X+=1, Q44=2".into())
}

fn criterion_9(sweep: &[Sweep]) -> Outcome {
    let e = |e: rtq::windings::LoopError| e.to_string();
    let mut hat_pairs = 0;
    for s in sweep {
        let d = build(s.f).map_err(|e| e.to_string())?;
        let n = d.size();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && d.is_active(i) == d.is_active(j) {
                    let t = loop_tilde(&d, i, j).and_then(|l| l.phi()).map_err(e)?;
                    let h = loop_hat(&d, i, j).and_then(|l| l.phi()).map_err(e)?;
                    ensure(t == h - 1, || format!("tilde/hat half-turn relation on {} ({i},{j})", s.f))?;
                    hat_pairs += 1;
                }
            }
        }
        // Cycle additivity of windings of γ_{i,j}.
        for role in Role::ALL {
            let px = d.puncture_x(role);
            let mut w = vec![vec![0i64; n + 1]; n + 1];
            for i in 1..=n {
                for j in 1..=n {
                    w[i][j] = winding(&loop_gamma_pair(&d, i, j).map_err(e)?, px).map_err(e)?;
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        ensure(w[i][j] + w[j][k] == w[i][k], || format!("winding additivity on {}", s.f))?;
                    }
                }
            }
        }
        // Couple relations and block shapes.
        let part = d.partition_xyz().map_err(|e| e.to_string())?;
        let q = &s.full;
        let p = |i: usize| i - 1;
        let pairs: Vec<(usize, usize)> = part
            .couples
            .iter()
            .map(|&(a, b)| if q.s[p(a)] > q.s[p(b)] { (p(a), p(b)) } else { (p(b), p(a)) })
            .collect();
        for &(x, y) in &pairs {
            ensure(
                q.s[x] == q.s[y] + 1 && q.a[x] == q.a[y] && q.t[x] == q.t[y] - 1 && q.q[x][x] == q.q[y][y] + 1,
                || format!("couple cap symmetry on {}", s.f),
            )?;
            for &z in &part.z_block {
                ensure(q.q[x][p(z)] == q.q[y][p(z)], || format!("couple rows agree on the remaining block on {}", s.f))?;
            }
            for &(x2, y2) in &pairs {
                ensure(q.q[x][x2] == q.q[y][y2] + 1, || format!("couple-to-couple offset on {}", s.f))?;
                let diff = q.q[x][y2] - q.q[y][y2];
                let back = q.q[x2][y] - q.q[y2][y];
                let ok = if x == x2 { diff == 0 } else { (diff == 0 || diff == 1) && diff + back == 1 };
                ensure(ok, || format!("couple cross block shape on {}", s.f))?;
            }
        }
        // Specialization of the oracle.
        for j in 0..=3 {
            let oracle = poincare(s.f, j);
            let expanded = expand_quiver_form(&s.full, j);
            let shift = compare_up_to_shift(&oracle, &expanded).map_err(|m| m.detail)?;
            let sign = if shift.z % 2 == 0 { 1 } else { -1 };
            let lhs = specialize_t(&oracle);
            let rhs = specialize_t(&expanded.shift((shift.x, shift.y, 0)));
            for (l, c) in lhs.terms() {
                ensure(*c == rhs.coefficient(l).scale(&sign.into()), || format!("specialization on {} j={j}", s.f))?;
            }
            ensure(lhs.terms().count() == rhs.terms().count(), || format!("specialization on {}", s.f))?;
        }
    }
    // Inversion statistic for all compositions of j <= 8.
    let mut comps = 0;
    for j in 0..=8usize {
        for mask in 0..(1u32 << j.saturating_sub(1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for b in 0..j.saturating_sub(1) {
                if mask & (1 << b) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            if j > 0 {
                parts.push(run);
            }
            let div = quantum_multinomial(j, &parts).map_err(|e| e.to_string())?;
            ensure(div == multinomial_by_inversions(&parts), || format!("multinomial inversion sum on {parts:?}"))?;
            comps += 1;
        }
    }
    // Pochhammer sum identity for m <= 3 parts of size <= 3.
    let x2 = LaurentPoly3::monomial(1, (0, 2, 0));
    let mut instances = 0;
    for m in 1..=3u32 {
        for code in 0..4usize.pow(m) {
            let d: Vec<usize> = (0..m).map(|k| (code / 4usize.pow(k)) % 4).collect();
            ensure(verify_pochhammer_identity(&x2, &d), || format!("Pochhammer identity on {d:?}"))?;
            instances += 1;
        }
    }
    Ok(format!(
        "{hat_pairs} hat pairs, additivity, couple/block relations, {comps} compositions, {instances} Pochhammer instances, specialization"
    ))
}

fn main() {
    let total = Instant::now();
    let sweep = sweep_data(10);
    let mut failures = 0;
    let mut report = |n: usize, title: &str, r: Outcome| {
        match r {
            Ok(detail) => println!("PASS {n}: {title} — {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL {n}: {title} — {why}");
            }
        }
    };
    report(1, "10/3 almost-quiver tables", criterion_1());
    report(2, "8/1 full and reduced tables", criterion_2());
    report(3, "7/1 reduced table", criterion_3());
    report(4, "n/1 closed forms, n <= 16", criterion_4());
    match &sweep {
        Ok(s) => {
            report(5, "quiver form = oracle up to shift, u+v <= 10, j <= 3", criterion_5(s));
            report(6, "almost-quiver form = quiver form, u+v <= 10, j <= 3", criterion_6(s));
        }
        Err(e) => {
            for (n, t) in [(5, "oracle sweep"), (6, "almost sweep")] {
                report(n, t, Err(e.clone()));
            }
        }
    }
    report(7, "two routes to Q agree and Q is symmetric", criterion_7());
    report(8, "calibration anchors", criterion_8());
    match &sweep {
        Ok(s) => report(9, "property suites", criterion_9(s)),
        Err(e) => report(9, "property suites", Err(e.clone())),
    }
    println!("acceptance: {} failed, {:.2}s total", failures, total.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
