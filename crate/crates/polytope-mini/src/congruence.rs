use crate::VPolytope;

/// Tests congruence of two vertex sets (reflections allowed) by searching for
/// a vertex correspondence under which the pairwise-distance matrices agree
/// within `tol`. The search is pruned by per-vertex distance multisets, so
/// only plausible assignments are explored.
pub fn congruent(p: &VPolytope, q: &VPolytope, tol: f64) -> bool {
    let n = p.vertices.len();
    if n != q.vertices.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let dp = distance_matrix(p);
    let dq = distance_matrix(q);

    // Global multiset pre-check.
    let mut all_p: Vec<f64> = dp.iter().flatten().copied().collect();
    let mut all_q: Vec<f64> = dq.iter().flatten().copied().collect();
    all_p.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    all_q.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    if all_p
        .iter()
        .zip(&all_q)
        .any(|(a, b)| (a - b).abs() > tol)
    {
        return false;
    }

    // Candidate targets per vertex, filtered by row multisets.
    let rows_p: Vec<Vec<f64>> = dp.iter().map(|r| sorted(r)).collect();
    let rows_q: Vec<Vec<f64>> = dq.iter().map(|r| sorted(r)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    rows_p[i]
                        .iter()
                        .zip(&rows_q[j])
                        .all(|(a, b)| (a - b).abs() <= tol)
                })
                .collect()
        })
        .collect();

    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &mut assignment, &mut used, &candidates, &dp, &dq, tol)
}

fn extend(
    i: usize,
    assignment: &mut [usize],
    used: &mut [bool],
    candidates: &[Vec<usize>],
    dp: &[Vec<f64>],
    dq: &[Vec<f64>],
    tol: f64,
) -> bool {
    if i == assignment.len() {
        return true;
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = (0..i).all(|k| (dp[i][k] - dq[j][assignment[k]]).abs() <= tol);
        if !consistent {
            continue;
        }
        assignment[i] = j;
        used[j] = true;
        if extend(i + 1, assignment, used, candidates, dp, dq, tol) {
            return true;
        }
        used[j] = false;
        assignment[i] = usize::MAX;
    }
    false
}

fn distance_matrix(p: &VPolytope) -> Vec<Vec<f64>> {
    p.vertices
        .iter()
        .map(|a| p.vertices.iter().map(|b| (a - b).norm()).collect())
        .collect()
}

fn sorted(row: &[f64]) -> Vec<f64> {
    let mut r = row.to_vec();
    r.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    r
}
