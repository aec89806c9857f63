//! Published reference values: benchmark tables and printed scheme coefficients.

use crate::problems::ProblemId;

/// One tabulated point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableEntry {
    pub x: f64,
    pub t: f64,
    pub present: f64,
    pub exact: f64,
    /// Competitor methods, by short name.
    pub others: &'static [(&'static str, f64)],
}

/// Tabulated error norms at one report time (unscaled).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormEntry {
    pub t: f64,
    pub linf: f64,
    pub l2: f64,
    /// Competitor `(name, linf, l2)`.
    pub others: &'static [(&'static str, f64, f64)],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PublishedTable {
    pub id: u8,
    pub problem: ProblemId,
    pub nu: f64,
    pub h: f64,
    pub tau: f64,
    pub entries: &'static [TableEntry],
    pub norms: &'static [NormEntry],
}

impl PublishedTable {
    /// Distinct report times, ascending.
    pub fn times(&self) -> Vec<f64> {
        let mut t: Vec<f64> = self.entries.iter().map(|e| e.t).collect();
        t.sort_by(f64::total_cmp);
        t.dedup();
        t
    }

    pub fn entry(&self, x: f64, t: f64) -> Option<&TableEntry> {
        self.entries
            .iter()
            .find(|e| (e.x - x).abs() < 1e-12 && (e.t - t).abs() < 1e-12)
    }

    pub fn norm_at(&self, t: f64) -> Option<&NormEntry> {
        self.norms.iter().find(|n| (n.t - t).abs() < 1e-12)
    }
}

pub fn table(id: u8) -> Option<&'static PublishedTable> {
    TABLES.iter().find(|t| t.id == id)
}

/// Denominator of the stability function as printed (lowest degree first).
pub const PRINTED_DENOMINATOR: [i64; 7] = [453600, 230040, 48600, 5480, 540, 135, 27];
/// Alternative printings of the same coefficients elsewhere in the text.
pub const PRINTED_DENOMINATOR_ALT: [(usize, i64); 1] = [(1, 2300)];
/// Numerator of the scalar stability function as printed, `540 (840, -414, 82, -7)`.
pub const PRINTED_NUMERATOR_FACTOR: i64 = 540;
pub const PRINTED_NUMERATOR: [i64; 4] = [840, -414, 82, -7];
/// The matrix form of the propagator prints this entry differently.
pub const PRINTED_NUMERATOR_ALT: [(usize, i64); 1] = [(2, 84)];

/// `u_n` weight of the first Hermite stage as printed, over 15552.
pub const PRINTED_FIRST_STAGE_U0: i64 = 1500;
/// `h^2 u''_{n+1}` weight of the fourth corrected stage as printed, over 729.
pub const PRINTED_FOURTH_STAGE_SECOND_DERIVATIVE: i64 = 20;

pub static TABLES: [PublishedTable; 7] = [
    PublishedTable {
        id: 1,
        problem: ProblemId::Ex1,
        nu: 2.0,
        h: 0.0125,
        tau: 0.0001,
        entries: &[
            TableEntry { x: 0.1, t: 0.001, present: 0.304976, exact: 0.305088, others: &[] },
            TableEntry { x: 0.1, t: 0.01, present: 0.273145, exact: 0.273239, others: &[] },
            TableEntry { x: 0.1, t: 0.1, present: 0.109509, exact: 0.109538, others: &[] },
            TableEntry { x: 0.2, t: 0.001, present: 0.580361, exact: 0.580565, others: &[] },
            TableEntry { x: 0.2, t: 0.01, present: 0.521393, exact: 0.521564, others: &[] },
            TableEntry { x: 0.2, t: 0.1, present: 0.209737, exact: 0.209792, others: &[] },
            TableEntry { x: 0.3, t: 0.001, present: 0.799363, exact: 0.799621, others: &[] },
            TableEntry { x: 0.3, t: 0.01, present: 0.72163, exact: 0.721852, others: &[] },
            TableEntry { x: 0.3, t: 0.1, present: 0.29182, exact: 0.291896, others: &[] },
            TableEntry { x: 0.4, t: 0.001, present: 0.940545, exact: 0.940817, others: &[] },
            TableEntry { x: 0.4, t: 0.01, present: 0.854348, exact: 0.85459, others: &[] },
            TableEntry { x: 0.4, t: 0.1, present: 0.347834, exact: 0.347924, others: &[] },
            TableEntry { x: 0.5, t: 0.001, present: 0.989926, exact: 0.990174, others: &[] },
            TableEntry { x: 0.5, t: 0.01, present: 0.905483, exact: 0.905713, others: &[] },
            TableEntry { x: 0.5, t: 0.1, present: 0.371482, exact: 0.371577, others: &[] },
            TableEntry { x: 0.6, t: 0.001, present: 0.942407, exact: 0.942609, others: &[] },
            TableEntry { x: 0.6, t: 0.01, present: 0.868137, exact: 0.868334, others: &[] },
            TableEntry { x: 0.6, t: 0.1, present: 0.358954, exact: 0.359046, others: &[] },
            TableEntry { x: 0.7, t: 0.001, present: 0.802375, exact: 0.802522, others: &[] },
            TableEntry { x: 0.7, t: 0.01, present: 0.743949, exact: 0.744098, others: &[] },
            TableEntry { x: 0.7, t: 0.1, present: 0.309827, exact: 0.309905, others: &[] },
            TableEntry { x: 0.8, t: 0.001, present: 0.583373, exact: 0.583466, others: &[] },
            TableEntry { x: 0.8, t: 0.01, present: 0.543723, exact: 0.543821, others: &[] },
            TableEntry { x: 0.8, t: 0.1, present: 0.22776, exact: 0.227817, others: &[] },
            TableEntry { x: 0.9, t: 0.001, present: 0.306837, exact: 0.306881, others: &[] },
            TableEntry { x: 0.9, t: 0.01, present: 0.286951, exact: 0.286999, others: &[] },
            TableEntry { x: 0.9, t: 0.1, present: 0.120656, exact: 0.120687, others: &[] },
        ],
        norms: &[
            NormEntry { t: 0.001, linf: 0.000271275, l2: 6.41526e-05, others: &[] },
            NormEntry { t: 0.01, linf: 0.0002413, l2: 5.82562e-05, others: &[] },
            NormEntry { t: 0.1, linf: 9.54852e-05, l2: 2.27535e-05, others: &[] },
        ],
    },
    PublishedTable {
        id: 2,
        problem: ProblemId::Ex1,
        nu: 0.2,
        h: 0.0125,
        tau: 0.0001,
        entries: &[
            TableEntry { x: 0.25, t: 0.4, present: 0.3087531, exact: 0.30889, others: &[("FEM", 0.31215), ("Asai", 0.30891)] },
            TableEntry { x: 0.25, t: 0.6, present: 0.2406489, exact: 0.24074, others: &[("FEM", 0.2436), ("Asai", 0.24076)] },
            TableEntry { x: 0.25, t: 0.8, present: 0.195612, exact: 0.19568, others: &[("FEM", 0.19815), ("Asai", 0.1957)] },
            TableEntry { x: 0.25, t: 1.0, present: 0.1625168, exact: 0.16256, others: &[("FEM", 0.16473), ("Asai", 0.16259)] },
            TableEntry { x: 0.25, t: 3.0, present: 0.0271953, exact: 0.0272, others: &[("FEM", 0.02771), ("Asai", 0.02722)] },
            TableEntry { x: 0.5, t: 0.4, present: 0.5694998, exact: 0.56963, others: &[("FEM", 0.57293), ("Asai", 0.5697)] },
            TableEntry { x: 0.5, t: 0.6, present: 0.4470928, exact: 0.44721, others: &[("FEM", 0.45088), ("Asai", 0.44728)] },
            TableEntry { x: 0.5, t: 0.8, present: 0.3591441, exact: 0.35924, others: &[("FEM", 0.36286), ("Asai", 0.35932)] },
            TableEntry { x: 0.5, t: 1.0, present: 0.291841, exact: 0.29192, others: &[("FEM", 0.29532), ("Asai", 0.292)] },
            TableEntry { x: 0.5, t: 3.0, present: 0.0401946, exact: 0.04021, others: &[("FEM", 0.04097), ("Asai", 0.04023)] },
            TableEntry { x: 0.75, t: 0.4, present: 0.6254715, exact: 0.62544, others: &[("FEM", 0.63038), ("Asai", 0.62567)] },
            TableEntry { x: 0.75, t: 0.6, present: 0.4871652, exact: 0.48721, others: &[("FEM", 0.49268), ("Asai", 0.48747)] },
            TableEntry { x: 0.75, t: 0.8, present: 0.3738557, exact: 0.37392, others: &[("FEM", 0.37912), ("Asai", 0.37415)] },
            TableEntry { x: 0.75, t: 1.0, present: 0.2874128, exact: 0.28747, others: &[("FEM", 0.29204), ("Asai", 0.28766)] },
            TableEntry { x: 0.75, t: 3.0, present: 0.0297645, exact: 0.02977, others: &[("FEM", 0.03038), ("Asai", 0.02979)] },
        ],
        norms: &[
        ],
    },
    PublishedTable {
        id: 3,
        problem: ProblemId::Ex1,
        nu: 0.01,
        h: 0.0125,
        tau: 0.01,
        entries: &[
            TableEntry { x: 0.25, t: 5.0, present: 0.046922, exact: 0.046963, others: &[] },
            TableEntry { x: 0.25, t: 10.0, present: 0.024202, exact: 0.024217, others: &[] },
            TableEntry { x: 0.25, t: 15.0, present: 0.0163, exact: 0.016308, others: &[] },
            TableEntry { x: 0.25, t: 20.0, present: 0.012236, exact: 0.01224, others: &[] },
            TableEntry { x: 0.5, t: 5.0, present: 0.093998, exact: 0.09392, others: &[] },
            TableEntry { x: 0.5, t: 10.0, present: 0.048414, exact: 0.048421, others: &[] },
            TableEntry { x: 0.5, t: 15.0, present: 0.032431, exact: 0.032439, others: &[] },
            TableEntry { x: 0.5, t: 20.0, present: 0.023883, exact: 0.023889, others: &[] },
            TableEntry { x: 0.75, t: 5.0, present: 0.141354, exact: 0.140832, others: &[] },
            TableEntry { x: 0.75, t: 10.0, present: 0.071175, exact: 0.071134, others: &[] },
            TableEntry { x: 0.75, t: 15.0, present: 0.044135, exact: 0.044133, others: &[] },
            TableEntry { x: 0.75, t: 20.0, present: 0.029155, exact: 0.029159, others: &[] },
        ],
        norms: &[
        ],
    },
    PublishedTable {
        id: 4,
        problem: ProblemId::Ex2,
        nu: 2.0,
        h: 0.0125,
        tau: 0.0001,
        entries: &[
            TableEntry { x: 0.1, t: 0.001, present: 0.35070299, exact: 0.350947, others: &[] },
            TableEntry { x: 0.1, t: 0.01, present: 0.294821969, exact: 0.294953, others: &[] },
            TableEntry { x: 0.1, t: 0.1, present: 0.112863, exact: 0.112892, others: &[] },
            TableEntry { x: 0.2, t: 0.001, present: 0.630240123, exact: 0.630504, others: &[] },
            TableEntry { x: 0.2, t: 0.01, present: 0.552873368, exact: 0.553085, others: &[] },
            TableEntry { x: 0.2, t: 0.1, present: 0.216195, exact: 0.216252, others: &[] },
            TableEntry { x: 0.3, t: 0.001, present: 0.830425346, exact: 0.830681, others: &[] },
            TableEntry { x: 0.3, t: 0.01, present: 0.749515568, exact: 0.749751, others: &[] },
            TableEntry { x: 0.3, t: 0.1, present: 0.300887, exact: 0.300966, others: &[] },
            TableEntry { x: 0.4, t: 0.001, present: 0.951009637, exact: 0.951242, others: &[] },
            TableEntry { x: 0.4, t: 0.01, present: 0.873232122, exact: 0.873459, others: &[] },
            TableEntry { x: 0.4, t: 0.1, present: 0.35877, exact: 0.358863, others: &[] },
            TableEntry { x: 0.5, t: 0.001, present: 0.991793845, exact: 0.991996, others: &[] },
            TableEntry { x: 0.5, t: 0.01, present: 0.91951799, exact: 0.919723, others: &[] },
            TableEntry { x: 0.5, t: 0.1, present: 0.383324, exact: 0.383422, others: &[] },
            TableEntry { x: 0.6, t: 0.001, present: 0.952578533, exact: 0.952752, others: &[] },
            TableEntry { x: 0.6, t: 0.01, present: 0.886057211, exact: 0.886239, others: &[] },
            TableEntry { x: 0.6, t: 0.1, present: 0.370563, exact: 0.370658, others: &[] },
            TableEntry { x: 0.7, t: 0.001, present: 0.833164134, exact: 0.833318, others: &[] },
            TableEntry { x: 0.7, t: 0.01, present: 0.771302597, exact: 0.771464, others: &[] },
            TableEntry { x: 0.7, t: 0.1, present: 0.319985, exact: 0.320066, others: &[] },
            TableEntry { x: 0.8, t: 0.001, present: 0.633350801, exact: 0.6335, others: &[] },
            TableEntry { x: 0.8, t: 0.01, present: 0.57613787, exact: 0.576273, others: &[] },
            TableEntry { x: 0.8, t: 0.1, present: 0.235312, exact: 0.235371, others: &[] },
            TableEntry { x: 0.9, t: 0.001, present: 0.352988009, exact: 0.353149, others: &[] },
            TableEntry { x: 0.9, t: 0.01, present: 0.310053369, exact: 0.310136, others: &[] },
            TableEntry { x: 0.9, t: 0.1, present: 0.124687, exact: 0.124718, others: &[] },
        ],
        norms: &[
            NormEntry { t: 0.001, linf: 0.000264275, l2: 6.55334e-05, others: &[] },
            NormEntry { t: 0.01, linf: 0.000235909, l2: 6.07706e-05, others: &[] },
            NormEntry { t: 0.1, linf: 9.85169e-05, l2: 2.46429e-05, others: &[] },
        ],
    },
    PublishedTable {
        id: 5,
        problem: ProblemId::Ex2,
        nu: 0.2,
        h: 0.0125,
        tau: 0.0001,
        entries: &[
            TableEntry { x: 0.25, t: 0.4, present: 0.317374, exact: 0.31752, others: &[("FEM", 0.32091), ("Asai", 0.31754)] },
            TableEntry { x: 0.25, t: 0.6, present: 0.246045, exact: 0.24614, others: &[("FEM", 0.2491), ("Asai", 0.24616)] },
            TableEntry { x: 0.25, t: 0.8, present: 0.19949, exact: 0.19956, others: &[("FEM", 0.20211), ("Asai", 0.19958)] },
            TableEntry { x: 0.25, t: 1.0, present: 0.165549, exact: 0.1656, others: &[("FEM", 0.16782), ("Asai", 0.16562)] },
            TableEntry { x: 0.25, t: 3.0, present: 0.027752, exact: 0.02776, others: &[("FEM", 0.02828), ("Asai", 0.02777)] },
            TableEntry { x: 0.5, t: 0.4, present: 0.584404, exact: 0.58458, others: &[("FEM", 0.58788), ("Asai", 0.5846)] },
            TableEntry { x: 0.5, t: 0.6, present: 0.457862, exact: 0.45798, others: &[("FEM", 0.46174), ("Asai", 0.45805)] },
            TableEntry { x: 0.5, t: 0.8, present: 0.367304, exact: 0.3674, others: &[("FEM", 0.37111), ("Asai", 0.36748)] },
            TableEntry { x: 0.5, t: 1.0, present: 0.298267, exact: 0.29834, others: &[("FEM", 0.30183), ("Asai", 0.29843)] },
            TableEntry { x: 0.5, t: 3.0, present: 0.041054, exact: 0.04107, others: &[("FEM", 0.04185), ("Asai", 0.4109)] },
            TableEntry { x: 0.75, t: 0.4, present: 0.64566, exact: 0.64562, others: &[("FEM", 0.65054), ("Asai", 0.64586)] },
            TableEntry { x: 0.75, t: 0.6, present: 0.502629, exact: 0.50268, others: &[("FEM", 0.50825), ("Asai", 0.50294)] },
            TableEntry { x: 0.75, t: 0.8, present: 0.385269, exact: 0.38534, others: &[("FEM", 0.39068), ("Asai", 0.38557)] },
            TableEntry { x: 0.75, t: 1.0, present: 0.295794, exact: 0.29586, others: &[("FEM", 0.30057), ("Asai", 0.29605)] },
            TableEntry { x: 0.75, t: 3.0, present: 0.030432, exact: 0.03044, others: &[("FEM", 0.03106), ("Asai", 0.03046)] },
        ],
        norms: &[
        ],
    },
    PublishedTable {
        id: 6,
        problem: ProblemId::Ex2,
        nu: 0.01,
        h: 0.0125,
        tau: 0.01,
        entries: &[
            TableEntry { x: 0.25, t: 5.0, present: 0.047372, exact: 0.047415, others: &[] },
            TableEntry { x: 0.25, t: 10.0, present: 0.024321, exact: 0.024336, others: &[] },
            TableEntry { x: 0.25, t: 15.0, present: 0.016355, exact: 0.016362, others: &[] },
            TableEntry { x: 0.25, t: 20.0, present: 0.012268, exact: 0.012272, others: &[] },
            TableEntry { x: 0.5, t: 5.0, present: 0.094895, exact: 0.094814, others: &[] },
            TableEntry { x: 0.5, t: 10.0, present: 0.048653, exact: 0.04866, others: &[] },
            TableEntry { x: 0.5, t: 15.0, present: 0.032542, exact: 0.03255, others: &[] },
            TableEntry { x: 0.5, t: 20.0, present: 0.023951, exact: 0.023957, others: &[] },
            TableEntry { x: 0.75, t: 5.0, present: 0.142693, exact: 0.142154, others: &[] },
            TableEntry { x: 0.75, t: 10.0, present: 0.07156, exact: 0.071517, others: &[] },
            TableEntry { x: 0.75, t: 15.0, present: 0.04433, exact: 0.044328, others: &[] },
            TableEntry { x: 0.75, t: 20.0, present: 0.029271, exact: 0.029275, others: &[] },
        ],
        norms: &[
        ],
    },
    PublishedTable {
        id: 7,
        problem: ProblemId::Ex3,
        nu: 0.002,
        h: 0.0005,
        tau: 0.01,
        entries: &[
            TableEntry { x: 0.2, t: 1.7, present: 0.11766, exact: 0.117647, others: &[("Xie", 0.11745)] },
            TableEntry { x: 0.2, t: 3.0, present: 0.066669, exact: 0.066667, others: &[("Xie", 0.06648)] },
            TableEntry { x: 0.2, t: 3.5, present: 0.057144, exact: 0.057143, others: &[("Xie", 0.05697)] },
            TableEntry { x: 0.4, t: 1.7, present: 0.23542, exact: 0.235294, others: &[("Xie", 0.23456)] },
            TableEntry { x: 0.4, t: 3.0, present: 0.133355, exact: 0.133333, others: &[("Xie", 0.13295)] },
            TableEntry { x: 0.4, t: 3.5, present: 0.114299, exact: 0.114286, others: &[("Xie", 0.11394)] },
            TableEntry { x: 0.6, t: 1.7, present: 0.353346, exact: 0.352909, others: &[("Xie", 0.34936)] },
            TableEntry { x: 0.6, t: 3.0, present: 0.200079, exact: 0.2, others: &[("Xie", 0.19922)] },
            TableEntry { x: 0.6, t: 3.5, present: 0.171478, exact: 0.171429, others: &[("Xie", 0.17082)] },
            TableEntry { x: 0.8, t: 1.7, present: 0.0, exact: 0.0, others: &[("Xie", 0.0)] },
            TableEntry { x: 0.8, t: 3.0, present: 0.266808, exact: 0.266618, others: &[("Xie", 0.26478)] },
            TableEntry { x: 0.8, t: 3.5, present: 0.22869, exact: 0.228571, others: &[("Xie", 0.22737)] },
            TableEntry { x: 1.0, t: 1.7, present: 0.0, exact: 0.0, others: &[("Xie", 0.0)] },
            TableEntry { x: 1.0, t: 3.0, present: 0.0, exact: 0.0, others: &[("Xie", 0.0)] },
            TableEntry { x: 1.0, t: 3.5, present: 2.03e-05, exact: 2e-05, others: &[("Xie", 2.8e-05)] },
        ],
        norms: &[
            NormEntry { t: 1.7, linf: 0.00050201, l2: 0.00016675, others: &[("Xie", 0.02970447, 0.00359366)] },
            NormEntry { t: 3.0, linf: 0.00021289, l2: 8.135e-05, others: &[("Xie", 0.01900976, 0.0026351)] },
            NormEntry { t: 3.5, linf: 0.0001687, l2: 6.695e-05, others: &[("Xie", 0.01678871, 0.00241729)] },
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        let sizes: Vec<usize> = TABLES.iter().map(|t| t.entries.len()).collect();
        assert_eq!(sizes, vec![27, 15, 12, 27, 15, 12, 15]);
        assert_eq!(table(7).unwrap().times(), vec![1.7, 3.0, 3.5]);
        assert!(table(8).is_none());
    }

    #[test]
    fn spot_values() {
        let t1 = table(1).unwrap();
        assert_eq!(t1.entry(0.5, 0.1).unwrap().present, 0.371482);
        assert_eq!(t1.norm_at(0.1).unwrap().linf, 9.54852e-5);
        let t2 = table(2).unwrap();
        let e = t2.entry(0.5, 1.0).unwrap();
        assert_eq!((e.present, e.exact, e.others[0].1), (0.291841, 0.29192, 0.29532));
        let t7 = table(7).unwrap();
        assert_eq!(t7.entry(0.2, 3.0).unwrap().present, 0.066669);
        assert_eq!(t7.norm_at(1.7).unwrap().others[0].1, 29.70447e-3);
    }
}
