//! Constructors for the named diagrams. All cyclic orders are
//! counterclockwise as drawn in the plane with the circles' interiors to the
//! left of their orientation.

use super::FamilyError;
use crate::diagram::{
    connected_sum, insert_template, Diagram, DiagramBuilder, DiagramCombo, Template,
};

/// The wheel: legs `l_1..l_k` on one circle, an inner cycle `v_1..v_k`,
/// spokes `l_i - v_i`, and order `(spoke, next, previous)` at each `v_i`.
pub fn omega(k: usize) -> Result<Diagram, FamilyError> {
    if k == 0 {
        return Err(FamilyError::Range("omega needs k >= 1".into()));
    }
    let mut b = DiagramBuilder::new();
    let legs = b.circle(k);
    let vs: Vec<[u32; 3]> = (0..k).map(|_| b.vertex()).collect();
    for i in 0..k {
        b.edge(legs[i], vs[i][0]);
        b.edge(vs[i][1], vs[(i + 1) % k][2]);
    }
    Ok(b.build().expect("wheel is valid"))
}

/// Chain of `k + 1` circles, consecutive ones joined by a chord.
pub fn chain(k: usize) -> Diagram {
    let mut b = DiagramBuilder::new();
    let mut prev_next: Option<u32> = None;
    for i in 0..=k {
        let legs = (i > 0) as usize + (i < k) as usize;
        let c = b.circle(legs);
        if let Some(p) = prev_next {
            b.edge(p, c[0]);
        }
        prev_next = (i < k).then(|| *c.last().unwrap());
    }
    b.build().expect("chain is valid")
}

/// Ring of `k` circles joined cyclically by `k` chords; `C_0` is a circle
/// and `C_1` coincides with the chain of two circles.
pub fn ring(k: usize) -> Diagram {
    if k < 2 {
        return if k == 0 { Diagram::circle() } else { chain(1) };
    }
    let mut b = DiagramBuilder::new();
    let cs: Vec<Vec<u32>> = (0..k).map(|_| b.circle(2)).collect();
    for i in 0..k {
        // leg 1 of circle i points forward, leg 0 of circle i+1 back
        b.edge(cs[i][1], cs[(i + 1) % k][0]);
    }
    b.build().expect("ring is valid")
}

/// Two circles joined by `k` parallel chords `p_i - q_{k+1-i}`.
pub fn parallel(k: usize) -> Diagram {
    if k == 0 {
        return Diagram::circle();
    }
    let mut b = DiagramBuilder::new();
    let p = b.circle(k);
    let q = b.circle(k);
    for i in 0..k {
        b.edge(p[i], q[k - 1 - i]);
    }
    b.build().expect("parallel chords are valid")
}

/// One circle carrying a four-rung ladder between two arcs.
pub fn psi() -> Diagram {
    let mut b = DiagramBuilder::new();
    // legs counterclockwise: top right, top left, bottom left, bottom right
    let legs = b.circle(4);
    let (tr, tl, bl, br) = (legs[0], legs[1], legs[2], legs[3]);
    // top vertices: (right, left, down); bottom vertices: (right, up, left)
    let top: Vec<[u32; 3]> = (0..4).map(|_| b.vertex()).collect();
    let bot: Vec<[u32; 3]> = (0..4).map(|_| b.vertex()).collect();
    b.edge(tl, top[0][1]);
    b.edge(top[3][0], tr);
    b.edge(bl, bot[0][2]);
    b.edge(bot[3][0], br);
    for i in 0..3 {
        b.edge(top[i][0], top[i + 1][1]);
        b.edge(bot[i][0], bot[i + 1][2]);
    }
    for i in 0..4 {
        b.edge(top[i][2], bot[i][1]);
    }
    b.build().expect("ladder is valid")
}

/// Two circles joined by two chords, plus a chord on the first circle whose
/// ends separate the two connecting legs.
pub fn omega3_two_circles() -> Diagram {
    let mut b = DiagramBuilder::new();
    let c0 = b.circle(4);
    let c1 = b.circle(2);
    b.edge(c0[0], c0[2]);
    b.edge(c0[1], c1[0]);
    b.edge(c0[3], c1[1]);
    b.build().expect("valid")
}

/// The template graph with its three external legs on one circle.
pub fn template_on_circle(t: &Template) -> Diagram {
    // a single vertex on a circle, then replaced by the template
    let mut b = DiagramBuilder::new();
    let legs = b.circle(3);
    let v = b.vertex();
    for i in 0..3 {
        b.edge(legs[i], v[i]);
    }
    let d = b.build().expect("valid");
    let v0 = (0..d.vertex_count()).next().expect("one vertex");
    insert_template(&d, v0, t).expect("vertex exists")
}

/// `(L_i # C_j) # T_k`, summing along the last circle of the left operand
/// and the first circle of the right one.
pub fn d_ijk(i: usize, j: usize, k: usize) -> Diagram {
    let left = sum_last_first(&chain(i), &ring(j));
    sum_last_first(&left, &parallel(k))
}

pub(crate) fn sum_last_first(a: &Diagram, b: &Diagram) -> Diagram {
    connected_sum(a, a.circle_count() - 1, b, 0).expect("indices in range")
}

/// `D_{0,0,n} - D_{0,0,n-2} # omega_2`.
pub fn e_n(n: usize) -> Result<DiagramCombo, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Range("E needs n >= 2".into()));
    }
    let second = sum_last_first(&d_ijk(0, 0, n - 2), &omega(2)?);
    Ok(DiagramCombo::from(d_ijk(0, 0, n)) - DiagramCombo::from(second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let w = omega(2).unwrap();
        assert_eq!(
            (
                w.degree(),
                w.circle_count(),
                w.leg_count(),
                w.vertex_count()
            ),
            (2, 1, 2, 2)
        );
        assert_eq!(chain(3).circle_count(), 4);
        assert_eq!(chain(3).degree(), 3);
        assert_eq!(chain(0), Diagram::circle());
        assert_eq!(ring(3).circle_count(), 3);
        assert_eq!(ring(2), parallel(2));
        assert_eq!(ring(1), chain(1));
        assert_eq!(parallel(3).degree(), 3);
        let p = psi();
        assert_eq!((p.degree(), p.leg_count(), p.vertex_count()), (6, 4, 8));
        assert_eq!(omega3_two_circles().degree(), 3);
        assert_eq!(template_on_circle(&Template::t()).degree(), 3);
        assert_eq!(template_on_circle(&Template::x3()).degree(), 5);
    }

    #[test]
    fn d_circle_counts() {
        assert_eq!(d_ijk(0, 0, 0), Diagram::circle());
        assert_eq!(d_ijk(2, 0, 0).circle_count(), 3);
        assert_eq!(d_ijk(0, 3, 2).circle_count(), 4);
        assert_eq!(d_ijk(1, 3, 2).degree(), 6);
    }
}
