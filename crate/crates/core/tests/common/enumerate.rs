//! Brute-force enumeration of small triangulations and their 3-orientations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rt_morph::lattice::{Lattice, TieBreak};
use rt_morph::morph::decide;
use rt_morph::plane_graph::fixtures::{flip_edge, random_stacked};
use rt_morph::rt::construct::canonical_labeling;
use rt_morph::rt::{canonical_frame, construct_rt, RTRepresentation};
use rt_morph::schnyder::{color_orientation, oriented_triangles, validate_wood, Roots, Scope};
use rt_morph::{PlaneTriangulation, Triangle3};

/// Code of an embedding up to isomorphisms that keep the outer face, the
/// dart `outer[0] -> outer[1]` and the orientation.
pub fn rooted_code(g: &PlaneTriangulation) -> Vec<usize> {
    let [a, b, c] = g.outer();
    let mut label = vec![usize::MAX; g.n()];
    let mut first = vec![usize::MAX; g.n()];
    let mut order = vec![a];
    label[a] = 0;
    first[a] = b;
    let mut code = vec![usize::from(g.left_third(a, b) == c)];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let rot = g.rotation(v);
        let s = rot.iter().position(|&u| u == first[v]).unwrap();
        code.push(usize::MAX);
        for k in 0..rot.len() {
            let u = rot[(s + k) % rot.len()];
            if label[u] == usize::MAX {
                label[u] = order.len();
                first[u] = v;
                order.push(u);
            }
            code.push(label[u]);
        }
    }
    code
}

/// One representative of every rooted triangulation on `n` vertices, found
/// by a search over edge flips with the outer face fixed.
pub fn rooted_triangulations(n: usize) -> Vec<PlaneTriangulation> {
    let start = random_stacked(n, &mut super::rng(n as u64));
    let mut seen = HashSet::from([rooted_code(&start)]);
    let mut queue = VecDeque::from([start]);
    let mut all = Vec::new();
    while let Some(g) = queue.pop_front() {
        for &(a, b) in g.edges() {
            if let Some(h) = flip_edge(&g, a, b) {
                if seen.insert(rooted_code(&h)) {
                    queue.push_back(h);
                }
            }
        }
        all.push(g);
    }
    all
}

/// Orientation of the inner edges as out-neighbor lists.
pub type OutLists = Vec<Vec<usize>>;

/// Every orientation of the inner edges with out-degree 3 at each inner
/// vertex and 0 at the outer vertices.
pub fn three_orientations(g: &PlaneTriangulation) -> Vec<OutLists> {
    let n = g.n();
    let mut out: OutLists = vec![Vec::new(); n];
    let mut free = Vec::new();
    for &(a, b) in g.edges() {
        match (g.is_outer(a), g.is_outer(b)) {
            (true, true) => {}
            (true, false) => out[b].push(a),
            (false, true) => out[a].push(b),
            (false, false) => free.push((a, b)),
        }
    }
    let mut remaining = vec![0usize; n];
    for &(a, b) in &free {
        remaining[a] += 1;
        remaining[b] += 1;
    }
    let mut found = Vec::new();
    fn go(i: usize, free: &[(usize, usize)], out: &mut OutLists, remaining: &mut [usize], found: &mut Vec<OutLists>) {
        let feasible = |v: usize, out: &OutLists, remaining: &[usize]| out[v].len() <= 3 && out[v].len() + remaining[v] >= 3;
        if i == free.len() {
            found.push(out.clone());
            return;
        }
        let (a, b) = free[i];
        remaining[a] -= 1;
        remaining[b] -= 1;
        for (x, y) in [(a, b), (b, a)] {
            out[x].push(y);
            if feasible(a, out, remaining) && feasible(b, out, remaining) {
                go(i + 1, free, out, remaining, found);
            }
            out[x].pop();
        }
        remaining[a] += 1;
        remaining[b] += 1;
    }
    go(0, &free, &mut out, &mut remaining, &mut found);
    found.retain(|o| g.inner_vertices().all(|v| o[v].len() == 3));
    found
}

/// Directed edges of an orientation, for hashing.
pub fn darts(o: &OutLists) -> Vec<(usize, usize)> {
    let mut d: Vec<(usize, usize)> = o.iter().enumerate().flat_map(|(v, ps)| ps.iter().map(move |&p| (v, p))).collect();
    d.sort_unstable();
    d
}

/// Inner faces that are directed cycles of `o`.
pub fn cyclic_faces(g: &PlaneTriangulation, o: &OutLists) -> Vec<[usize; 3]> {
    let arc = |u: usize, v: usize| o[u].contains(&v);
    g.inner_faces()
        .iter()
        .copied()
        .filter(|&[a, b, c]| (arc(a, b) && arc(b, c) && arc(c, a)) || (arc(b, a) && arc(c, b) && arc(a, c)))
        .collect()
}

pub fn reverse_face(o: &OutLists, [a, b, c]: [usize; 3]) -> OutLists {
    let mut o = o.clone();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        for (x, y) in [(u, v), (v, u)] {
            if let Some(i) = o[x].iter().position(|&z| z == y) {
                o[x].remove(i);
                o[y].push(x);
                break;
            }
        }
    }
    o
}

/// Distances in the graph whose nodes are the orientations and whose edges
/// reverse one directed facial cycle. `None` marks unreachable pairs.
pub fn facial_flip_distances(g: &PlaneTriangulation, all: &[OutLists]) -> Vec<Vec<Option<usize>>> {
    let index: HashMap<Vec<(usize, usize)>, usize> = all.iter().enumerate().map(|(i, o)| (darts(o), i)).collect();
    let adj: Vec<Vec<usize>> = all
        .iter()
        .map(|o| cyclic_faces(g, o).into_iter().map(|f| index[&darts(&reverse_face(o, f))]).collect())
        .collect();
    (0..all.len())
        .map(|s| {
            let mut dist = vec![None; all.len()];
            dist[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v].is_none() {
                        dist[v] = Some(dist[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

#[derive(Debug, Default, Clone, Copy)]
pub struct LatticeStats {
    pub graphs: usize,
    pub woods: usize,
    pub pairs: usize,
    pub refused: usize,
}

/// Compare the library's lattice operations and morph decision with the
/// brute-force orientations of `g` rooted at `red`.
pub fn check_against_oracle(g: &Arc<PlaneTriangulation>, red: usize, stats: &mut LatticeStats) -> Result<(), String> {
    let roots = Roots::from_red(g, red).map_err(|e| e.to_string())?;
    let all = three_orientations(g);
    let lattice = Lattice::new(g);
    let mut woods = Vec::new();
    for o in &all {
        let t = color_orientation(g, roots, o).map_err(|e| format!("{:?}: {e}", darts(o)))?;
        let d = validate_wood(&t);
        if !d.is_empty() {
            return Err(format!("{:?}: {d:?}", darts(o)));
        }
        let mut lib: Vec<[usize; 3]> =
            oriented_triangles(&t, Scope::FacesOnly).into_iter().map(|(tri, _)| tri.vertices()).collect();
        let mut ours: Vec<[usize; 3]> = cyclic_faces(g, o).into_iter().map(|mut f| { f.sort_unstable(); f }).collect();
        lib.sort_unstable();
        ours.sort_unstable();
        if lib != ours {
            return Err(format!("oriented faces {lib:?} != {ours:?}"));
        }
        woods.push(t);
    }
    if woods.is_empty() {
        return Err("no 3-orientation".into());
    }

    let mut potentials = Vec::new();
    for t in &woods {
        let p = lattice.potential_with(t, TieBreak::Smallest).map_err(|e| e.to_string())?;
        if lattice.potential_with(t, TieBreak::Largest).map_err(|e| e.to_string())? != p {
            return Err(format!("potential depends on the tie-break: {:?}", darts(&t.out_lists())));
        }
        potentials.push(p);
    }
    let distinct: HashSet<Vec<(Triangle3, u64)>> = potentials.iter().map(|p| lattice.triangles().map(|t| (t, p.get(t))).collect()).collect();
    if distinct.len() != woods.len() {
        return Err(format!("{} woods share {} potentials", woods.len(), distinct.len()));
    }
    let minimum = lattice.minimum(roots).map_err(|e| e.to_string())?;
    if !lattice.potential(&minimum).map_err(|e| e.to_string())?.is_zero() || !woods.contains(&minimum) {
        return Err("minimum is not a zero-potential wood".into());
    }

    let dist = facial_flip_distances(g, &all);
    let reps: Vec<RTRepresentation> = woods
        .iter()
        .map(|t| construct_rt(t, &canonical_labeling(t).unwrap(), &canonical_frame(g.n())).unwrap())
        .collect();
    for i in 0..woods.len() {
        for j in 0..woods.len() {
            let (pi, pj) = (&potentials[i], &potentials[j]);
            let m = lattice.potential(&lattice.meet(&woods[i], &woods[j]).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let x = lattice.potential(&lattice.join(&woods[i], &woods[j]).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            for t in lattice.triangles() {
                if m.get(t) != pi.get(t).min(pj.get(t)) || x.get(t) != pi.get(t).max(pj.get(t)) {
                    return Err(format!("meet or join is not pointwise on {t}"));
                }
            }
            let d = decide(&reps[i], &reps[j]).map_err(|e| e.to_string())?;
            let expected = dist[i][j];
            if d.possible != expected.is_some() || d.flip_count != expected {
                return Err(format!("decide {d:?} but facial flip distance {expected:?}"));
            }
            stats.pairs += 1;
            stats.refused += usize::from(!d.possible);
        }
    }
    stats.woods += woods.len();
    Ok(())
}
