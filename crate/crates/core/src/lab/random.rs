use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::Diagram;

/// A uniformly wired diagram with the given numbers of circles, legs and
/// internal vertices: legs are dropped on random circles and all legs and
/// ports are paired at random, retrying until the result is valid.
///
/// Returns `None` when no valid wiring turned up within the attempt budget,
/// which is certain when `legs + 3 * vertices` is odd or there are vertices
/// but no legs.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    circles: usize,
    legs: usize,
    vertices: usize,
) -> Option<Diagram> {
    const ATTEMPTS: usize = 2000;
    if circles == 0 || (legs + 3 * vertices) % 2 == 1 || (vertices > 0 && legs == 0) {
        return None;
    }
    let ports = (legs + 3 * vertices) as u32;
    for _ in 0..ATTEMPTS {
        let mut on_circle = vec![Vec::new(); circles];
        for leg in 0..legs as u32 {
            on_circle[rng.gen_range(0..circles)].push(leg);
        }
        let verts: Vec<[u32; 3]> = (0..vertices as u32)
            .map(|j| {
                let base = legs as u32 + 3 * j;
                [base, base + 1, base + 2]
            })
            .collect();
        let mut ids: Vec<u32> = (0..ports).collect();
        ids.shuffle(rng);
        let edges = ids.chunks(2).map(|e| [e[0], e[1]]).collect();
        if let Ok(d) = Diagram::from_parts(on_circle, verts, edges) {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (l, legs, v) in [(1, 4, 2), (2, 3, 3), (1, 6, 4), (2, 2, 0)] {
            let d = random_diagram(&mut rng, l, legs, v).unwrap();
            assert_eq!(
                (d.circle_count(), d.leg_count(), d.vertex_count()),
                (l, legs, v)
            );
        }
        assert!(random_diagram(&mut rng, 1, 3, 0).is_none());
        assert!(random_diagram(&mut rng, 1, 0, 2).is_none());
    }
}
