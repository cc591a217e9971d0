//! The pictured `Br_3` elements are drawn on six unlabeled points around a
//! rectangle. Try every assignment of the points `t1 t2 t3 b1 b2 b3` to the
//! pictured positions and keep those under which the stated multiplication
//! and trace identities hold.

use vassiliev_core::brauer::{named, BrElement, BrMatching};
use vassiliev_core::Poly;

const PICTURE: [(&str, [(usize, usize); 3]); 8] = [
    ("u+", [(0, 1), (2, 3), (4, 5)]),
    ("u-", [(0, 1), (2, 4), (3, 5)]),
    ("x+", [(0, 3), (1, 5), (2, 4)]),
    ("x-", [(0, 4), (1, 5), (2, 3)]),
    ("e", [(0, 5), (1, 2), (3, 4)]),
    ("f", [(0, 3), (1, 2), (4, 5)]),
    ("g", [(0, 1), (2, 5), (3, 4)]),
    ("h", [(0, 3), (1, 4), (2, 5)]),
];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

struct Named(Vec<(&'static str, BrElement)>);

impl Named {
    fn new(labels: &[usize]) -> Self {
        Named(
            PICTURE
                .iter()
                .map(|(name, pairs)| {
                    let pairs: Vec<(usize, usize)> =
                        pairs.iter().map(|&(a, b)| (labels[a], labels[b])).collect();
                    (
                        *name,
                        BrElement::basis(BrMatching::from_pairs(3, &pairs).unwrap()),
                    )
                })
                .collect(),
        )
    }

    fn get(&self, name: &str) -> BrElement {
        self.0.iter().find(|(n, _)| *n == name).unwrap().1.clone()
    }

    fn satisfies_identities(&self) -> bool {
        let u = &self.get("u+") - &self.get("u-");
        let x = &self.get("x+") - &self.get("x-");
        let d = self.get("u+");
        let h = self.get("h");
        let x2 = &x * &x;
        let cc = p("c^2 - c");
        let dh = &d - &h;
        let closed = &(&(&d.scale(&p("c^2")) - &h) + &(&d + &self.get("e")))
            - &(&self.get("f") + &self.get("g")).scale(&Poly::c());
        &(&u + &x) * &u == u.scale(&p("c - 2"))
            && &x2 * &x == &x2 + &x.scale(&p("2"))
            && x2.trace() == &cc * &p("c - 1")
            && -x.trace() == cc
            && u.trace() == cc
            && -(&u * &x).trace() == cc
            && (&u * &x2).trace() == cc
            && self.get("g").trace() == Poly::c()
            && dh.pow(3) == closed
    }
}

#[test]
fn picture_labelings() {
    let good: Vec<Vec<usize>> = permutations(6)
        .into_iter()
        .filter(|labels| Named::new(labels).satisfies_identities())
        .collect();
    assert_eq!(good.len(), 6);

    let library: Vec<BrElement> = PICTURE.iter().map(|(n, _)| named(3, n).unwrap()).collect();
    let matches = good
        .iter()
        .filter(|labels| {
            Named::new(labels)
                .0
                .iter()
                .map(|(_, e)| e.clone())
                .collect::<Vec<_>>()
                == library
        })
        .count();
    assert_eq!(matches, 1);

    // The survivors differ by renaming strands: each one sends the top and
    // bottom end of a strand to positions related the same way.
    for labels in &good {
        let pos = |pt: usize| labels.iter().position(|&l| l == pt).unwrap();
        for i in 0..3 {
            assert_eq!(pos(i) + pos(3 + i), 5, "{labels:?}");
        }
    }
}
