//! The fixed height-4, p = 7 computation: the 21-monomial basis of
//! `C^{3,-12}`, its dual generating set in `C^{13,12}`, and the sixteen
//! displayed differential identities between the duals.

/// Generator lists (as `(i, j)` pairs) of the 21 additive generators of
/// `C^{3, -12}` at `(7, 4)`: the six `h31 h4a h4b`, the four `h11 h22 h4a`,
/// the four `h13 h21 h4a`, and the seven triples without an `h4` factor.
pub(crate) fn basis_3_minus12() -> Vec<Vec<(u32, u32)>> {
    let mut out: Vec<Vec<(u32, u32)>> = Vec::with_capacity(21);
    for a in 0..4 {
        for b in a + 1..4 {
            out.push(vec![(3, 1), (4, a), (4, b)]);
        }
    }
    for a in 0..4 {
        out.push(vec![(1, 1), (2, 2), (4, a)]);
    }
    for a in 0..4 {
        out.push(vec![(1, 3), (2, 1), (4, a)]);
    }
    out.extend([
        vec![(1, 1), (1, 2), (1, 3)],
        vec![(1, 1), (3, 1), (3, 2)],
        vec![(1, 2), (3, 1), (3, 3)],
        vec![(1, 3), (3, 0), (3, 1)],
        vec![(2, 0), (2, 2), (3, 1)],
        vec![(2, 1), (2, 2), (3, 3)],
        vec![(2, 1), (2, 3), (3, 1)],
    ]);
    out
}

/// One displayed identity `d(lhs^*) = sum rhs^*`, checked at the level of
/// support with unit coefficients.  `lhs`/`rhs` hold the primal generator
/// sets whose duals appear in the display.
pub(crate) struct DualIdentity {
    pub label: String,
    pub lhs: Vec<(u32, u32)>,
    pub rhs: Vec<Vec<(u32, u32)>>,
}

fn ident(label: String, lhs: Vec<(u32, u32)>, rhs: Vec<Vec<(u32, u32)>>) -> DualIdentity {
    DualIdentity { label, lhs, rhs }
}

/// The sixteen displayed identities, families expanded over their free
/// indices (27 instances in total).
pub(crate) fn dual_identities() -> Vec<DualIdentity> {
    let mut ids = Vec::new();
    // d((h11 h22 h4k h4l)^*) = (h31 h4k h4l)^* = a_{k,l}
    for k in 0..4 {
        for l in k + 1..4 {
            ids.push(ident(
                format!("d((h11 h22 h4{k} h4{l})^*) = a_{k}{l}"),
                vec![(1, 1), (2, 2), (4, k), (4, l)],
                vec![vec![(3, 1), (4, k), (4, l)]],
            ));
        }
    }
    // d((h11 h12 h13 h4k)^*) = b_k + b'_k
    for k in 0..4 {
        ids.push(ident(
            format!("d((h11 h12 h13 h4{k})^*) = b_{k} + b'_{k}"),
            vec![(1, 1), (1, 2), (1, 3), (4, k)],
            vec![vec![(1, 3), (2, 1), (4, k)], vec![(1, 1), (2, 2), (4, k)]],
        ));
    }
    // d(b_k) = (h31 h4k)^* = x_k
    for k in 0..4 {
        ids.push(ident(
            format!("d(b_{k}) = x_{k}"),
            vec![(1, 3), (2, 1), (4, k)],
            vec![vec![(3, 1), (4, k)]],
        ));
    }
    // d(c_0) = (h13 h21)^* + (h11 h22)^*
    ids.push(ident(
        "d(c_0) = (h13 h21)^* + (h11 h22)^*".into(),
        vec![(1, 1), (1, 2), (1, 3)],
        vec![vec![(1, 3), (2, 1)], vec![(1, 1), (2, 2)]],
    ));
    // d(c_1) = x_1 + x_2
    ids.push(ident(
        "d(c_1) = x_1 + x_2".into(),
        vec![(1, 1), (3, 1), (3, 2)],
        vec![vec![(3, 1), (4, 1)], vec![(3, 1), (4, 2)]],
    ));
    // d(c_2) = x_2 + x_3
    ids.push(ident(
        "d(c_2) = x_2 + x_3".into(),
        vec![(1, 2), (3, 1), (3, 3)],
        vec![vec![(3, 1), (4, 2)], vec![(3, 1), (4, 3)]],
    ));
    // d(c_3) = x_3 + x_0
    ids.push(ident(
        "d(c_3) = x_3 + x_0".into(),
        vec![(1, 3), (3, 0), (3, 1)],
        vec![vec![(3, 1), (4, 3)], vec![(3, 1), (4, 0)]],
    ));
    // d(c_4) = x_0 + x_2
    ids.push(ident(
        "d(c_4) = x_0 + x_2".into(),
        vec![(2, 0), (2, 2), (3, 1)],
        vec![vec![(3, 1), (4, 0)], vec![(3, 1), (4, 2)]],
    ));
    // d(c_5) = 0
    ids.push(ident(
        "d(c_5) = 0".into(),
        vec![(2, 1), (2, 2), (3, 3)],
        vec![],
    ));
    // d(c_6) = x_1 + x_3
    ids.push(ident(
        "d(c_6) = x_1 + x_3".into(),
        vec![(2, 1), (2, 3), (3, 1)],
        vec![vec![(3, 1), (4, 1)], vec![(3, 1), (4, 3)]],
    ));
    // the six four-factor displays
    ids.push(ident(
        "d((h11 h13 h21 h32)^*) = b_1 + b_2 + c_1".into(),
        vec![(1, 1), (1, 3), (2, 1), (3, 2)],
        vec![
            vec![(1, 3), (2, 1), (4, 1)],
            vec![(1, 3), (2, 1), (4, 2)],
            vec![(1, 1), (3, 1), (3, 2)],
        ],
    ));
    ids.push(ident(
        "d((h12 h13 h20 h31)^*) = c_4 + c_3 + c_2".into(),
        vec![(1, 2), (1, 3), (2, 0), (3, 1)],
        vec![
            vec![(2, 0), (2, 2), (3, 1)],
            vec![(1, 3), (3, 0), (3, 1)],
            vec![(1, 2), (3, 1), (3, 3)],
        ],
    ));
    ids.push(ident(
        "d((h11 h13 h22 h30)^*) = c_3 + b'_3 + b'_0".into(),
        vec![(1, 1), (1, 3), (2, 2), (3, 0)],
        vec![
            vec![(1, 3), (3, 0), (3, 1)],
            vec![(1, 1), (2, 2), (4, 3)],
            vec![(1, 1), (2, 2), (4, 0)],
        ],
    ));
    ids.push(ident(
        "d((h10 h11 h22 h31)^*) = c_4 + c_1 + b'_1 + b'_0".into(),
        vec![(1, 0), (1, 1), (2, 2), (3, 1)],
        vec![
            vec![(2, 0), (2, 2), (3, 1)],
            vec![(1, 1), (3, 1), (3, 2)],
            vec![(1, 1), (2, 2), (4, 1)],
            vec![(1, 1), (2, 2), (4, 0)],
        ],
    ));
    ids.push(ident(
        "d((h11 h12 h22 h33)^*) = c_5 + c_2 + b'_2 + b'_3".into(),
        vec![(1, 1), (1, 2), (2, 2), (3, 3)],
        vec![
            vec![(2, 1), (2, 2), (3, 3)],
            vec![(1, 2), (3, 1), (3, 3)],
            vec![(1, 1), (2, 2), (4, 2)],
            vec![(1, 1), (2, 2), (4, 3)],
        ],
    ));
    ids.push(ident(
        "d((h11 h12 h23 h31)^*) = c_6 + c_2 + c_1".into(),
        vec![(1, 1), (1, 2), (2, 3), (3, 1)],
        vec![
            vec![(2, 1), (2, 3), (3, 1)],
            vec![(1, 2), (3, 1), (3, 3)],
            vec![(1, 1), (3, 1), (3, 2)],
        ],
    ));
    ids
}

/// The reference degree table at `(7, 4)`: signed reduced degrees of the
/// twelve generators with `i <= 3`; every `h_{4,a}` has degree 0.
pub(crate) const DEGREE_TABLE_7_4: [((u32, u32), i64); 12] = [
    ((1, 0), 1),
    ((1, 1), 7),
    ((1, 2), 49),
    ((1, 3), -57),
    ((2, 0), 8),
    ((2, 1), 56),
    ((2, 2), -8),
    ((2, 3), -56),
    ((3, 0), 57),
    ((3, 1), -1),
    ((3, 2), -7),
    ((3, 3), -49),
];
