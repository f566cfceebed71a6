//! Reference codes used by the verification suites: two small families of
//! standard-basis flags whose distances, projected parameters and table
//! entries are known exactly.

use flagcode::{Flag, FlagCode, FieldSpec, Subspace, TypeVector};

fn sp(field: &FieldSpec, n: usize, rows: &[&[u32]]) -> Subspace {
    let data: Vec<Vec<flagcode::FieldElement>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| field.element(v).expect("entry below q")).collect())
        .collect();
    Subspace::from_rows(field, n, &data).expect("fixture rows are well-formed")
}

/// Three flags of type (1,2,3) on GF(q)^5 built from standard basis vectors.
/// Pairwise distances are all 8 = D - 2, with projected distance triples
/// (2,2,4), (2,4,2) and (2,2,2) for the codes {F1,F2}, {F1,F3} and
/// {F1,F2,F3}.
pub fn reference_flags_n5(field: &FieldSpec) -> Vec<Flag> {
    let f1 = Flag::new(vec![
        sp(field, 5, &[&[1, 0, 0, 0, 0]]),
        sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]),
        sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]),
    ])
    .expect("valid flag");
    let f2 = Flag::new(vec![
        sp(field, 5, &[&[0, 0, 0, 1, 0]]),
        sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]]),
        sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]),
    ])
    .expect("valid flag");
    let f3 = Flag::new(vec![
        sp(field, 5, &[&[0, 0, 1, 0, 0]]),
        sp(field, 5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]),
        sp(field, 5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]),
    ])
    .expect("valid flag");
    vec![f1, f2, f3]
}

/// The sub-code of `reference_flags_n5` with the given flag indices.
pub fn reference_code_n5(field: &FieldSpec, indices: &[usize]) -> FlagCode {
    let flags = reference_flags_n5(field);
    let ty = TypeVector::new(5, vec![1, 2, 3]).expect("valid type");
    FlagCode::new(
        field.clone(),
        ty,
        indices.iter().map(|&i| flags[i].clone()).collect(),
    )
    .expect("valid code")
}

/// Five flags of type (1,2,4,5) on GF(q)^6. Their ten pairwise distances are
/// (8,8,12,12,8,8,8,12,10,10) in lexicographic pair order, so any sub-code
/// containing one of the distance-8 pairs has minimum distance D - 4 = 8.
pub fn reference_flags_n6(field: &FieldSpec) -> Vec<Flag> {
    let f1 = Flag::new(vec![
        sp(field, 6, &[&[1, 0, 0, 0, 0, 0]]),
        sp(field, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ]),
    ])
    .expect("valid flag");
    let f2 = Flag::new(vec![
        sp(field, 6, &[&[0, 1, 0, 0, 0, 0]]),
        sp(field, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
    ])
    .expect("valid flag");
    let f3 = Flag::new(vec![
        sp(field, 6, &[&[0, 1, 0, 0, 0, 0]]),
        sp(field, 6, &[&[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]),
        sp(field, 6, &[
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ]),
        sp(field, 6, &[
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
    ])
    .expect("valid flag");
    let f4 = Flag::new(vec![
        sp(field, 6, &[&[0, 0, 0, 0, 0, 1]]),
        sp(field, 6, &[&[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
    ])
    .expect("valid flag");
    let f5 = Flag::new(vec![
        sp(field, 6, &[&[0, 0, 0, 0, 1, 0]]),
        sp(field, 6, &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 1, 0]]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
        sp(field, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]),
    ])
    .expect("valid flag");
    vec![f1, f2, f3, f4, f5]
}

/// The sub-code of `reference_flags_n6` with the given flag indices.
pub fn reference_code_n6(field: &FieldSpec, indices: &[usize]) -> FlagCode {
    let flags = reference_flags_n6(field);
    let ty = TypeVector::new(6, vec![1, 2, 4, 5]).expect("valid type");
    FlagCode::new(
        field.clone(),
        ty,
        indices.iter().map(|&i| flags[i].clone()).collect(),
    )
    .expect("valid code")
}

/// The seven analyzed sub-codes of the n = 6 family with their expected
/// "d_S(C_i) is maximum" and "|C_i| = |C|" patterns.
pub fn reference_table_n6() -> Vec<(&'static str, Vec<usize>, [bool; 4], [bool; 4])> {
    vec![
        (
            "{F1,F2,F3,F4,F5}",
            vec![0, 1, 2, 3, 4],
            [true, false, false, true],
            [false, false, false, false],
        ),
        (
            "{F2,F3,F4,F5}",
            vec![1, 2, 3, 4],
            [true, false, false, true],
            [false, true, false, false],
        ),
        // The dim-4 maximum? entry: the two distinct projected subspaces sit
        // at distance 4, the best possible, so the column reads YES even
        // though two of the three flags collapse there.
        (
            "{F2,F3,F4}",
            vec![1, 2, 3],
            [true, false, true, true],
            [false, true, false, true],
        ),
        (
            "{F1,F2}",
            vec![0, 1],
            [true, false, true, true],
            [true, false, true, true],
        ),
        (
            "{F1,F3}",
            vec![0, 2],
            [true, false, false, true],
            [true, true, true, true],
        ),
        (
            "{F2,F3}",
            vec![1, 2],
            [false, false, true, true],
            [false, true, true, true],
        ),
        (
            "{F2,F5}",
            vec![1, 4],
            [true, true, false, false],
            [true, true, true, false],
        ),
    ]
}

/// Expected pairwise distances of the n = 6 family, lexicographic pair
/// order, with componentwise breakdowns.
pub fn reference_pair_distances_n6() -> Vec<((usize, usize), [usize; 4], usize)> {
    vec![
        ((0, 1), [2, 0, 4, 2], 8),
        ((0, 2), [2, 2, 2, 2], 8),
        ((0, 3), [2, 4, 4, 2], 12),
        ((0, 4), [2, 4, 4, 2], 12),
        ((1, 2), [0, 2, 4, 2], 8),
        ((1, 3), [2, 4, 0, 2], 8),
        ((1, 4), [2, 4, 2, 0], 8),
        ((2, 3), [2, 4, 4, 2], 12),
        ((2, 4), [2, 2, 4, 2], 10),
        ((3, 4), [2, 2, 2, 2], 8),
    ]
}
