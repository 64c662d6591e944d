//! Published reference data for dimensions 4 and 5: family vectors with
//! their weight enumerators and Gram determinants, classification counts,
//! and generator matrices of the extremal codes.
//!
//! Strings are kept in the notation they were published in and parsed at
//! use sites, so a transcription can be compared character by character.

/// One row of a parametric LCD family `n = period·t + s`.
#[derive(Clone, Copy, Debug)]
pub struct FamilyRow {
    pub k: usize,
    pub s: usize,
    /// Comma-separated affine entries of the multiplicity vector.
    pub a: &'static str,
    /// Claimed minimum weight as an affine form in `t`.
    pub min_weight: &'static str,
    /// Least `t` for which the claim is stated.
    pub t_from: i64,
    pub weight_enumerator: &'static str,
    pub gram_det: &'static str,
}

const fn row(
    k: usize,
    s: usize,
    a: &'static str,
    min_weight: &'static str,
    t_from: i64,
    weight_enumerator: &'static str,
    gram_det: &'static str,
) -> FamilyRow {
    FamilyRow {
        k,
        s,
        a,
        min_weight,
        t_from,
        weight_enumerator,
        gram_det,
    }
}

pub const DIM4_FAMILIES: [FamilyRow; 15] = [
    row(
        4,
        2,
        "t,t,t,t,t,t,t,t-1,t+1,t+1,t-1,t,t-1,t-1,t",
        "8t",
        1,
        "1+8y^{8t}+6y^{8t+2}+y^{8t+4}",
        "1280t^4+512t^3-96t^2-32t+1",
    ),
    row(
        4,
        3,
        "t,t,t,t,t,t,t,t,t,t,t-1,t,t,t,t",
        "8t",
        1,
        "1+2y^{8t}+6y^{8t+1}+4y^{8t+2}+2y^{8t+3}+y^{8t+4}",
        "1280t^4+640t^3+64t^2-8t-1",
    ),
    row(
        4,
        4,
        "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t",
        "8t+1",
        0,
        "1+4y^{8t+1}+6y^{8t+2}+4y^{8t+3}+y^{8t+4}",
        "1280t^4+1024t^3+288t^2+32t+1",
    ),
    row(
        4,
        5,
        "t,t,t,t,t,t,t,t+1,t+1,t,t+1,t,t,t-1,t-1",
        "8t+2",
        1,
        "1+10y^{8t+2}+5y^{8t+4}",
        "1280t^4+1664t^3+688t^2+104t+5",
    ),
    row(
        4,
        6,
        "t,t,t,t,t,t,t,t+1,t+1,t,t,t,t,t,t",
        "8t+2",
        0,
        "1+6y^{8t+2}+9y^{8t+4}",
        "1280t^4+1792t^3+800t^2+144t+9",
    ),
    row(
        4,
        9,
        "t,t,t,t,t+1,t+1,t+1,t+1,t,t+1,t+1,t,t,t,t-1",
        "8t+4",
        1,
        "1+9y^{8t+4}+6y^{8t+6}",
        "1280t^4+3072t^3+2656t^2+976t+129",
    ),
    row(
        4,
        10,
        "t,t,t,t,t,t,t+1,t+1,t+1,t+2,t+1,t+1,t,t,t-1",
        "8t+4",
        1,
        "1+7y^{8t+4}+6y^{8t+6}+2y^{8t+8}",
        "1280t^4+3328t^3+3040t^2+1152t+153",
    ),
    row(
        4,
        13,
        "t,t,t,t+1,t+1,t,t+1,t+2,t+2,t+1,t+1,t+1,t+1,t-1,t-1",
        "8t+6",
        1,
        "1+10y^{8t+6}+4y^{8t+8}+y^{8t+12}",
        "1280t^4+4480t^3+5424t^2+2744t+493",
    ),
    row(
        4,
        1,
        "t,t,t,t,t,t,t,t,t,t-1,t-1,t,t,t-1,t",
        "8t-1",
        1,
        "1+3y^{8t-1}+5y^{8t}+4y^{8t+1}+2y^{8t+2}+y^{8t+3}",
        "1280t^4-80t^2+1",
    ),
    row(
        4,
        7,
        "t,t,t,t,t,t,t,t+1,t+1,t,t,t,t,t,t+1",
        "8t+2",
        0,
        "1+4y^{8t+2}+2y^{8t+3}+3y^{8t+4}+6y^{8t+5}",
        "1280t^4+2048t^3+1056t^2+216t+15",
    ),
    row(
        4,
        8,
        "t,t,t,t,t,t,t+1,t+1,t+1,t+1,t,t,t,t,t",
        "8t+3",
        0,
        "1+4y^{8t+3}+5y^{8t+4}+4y^{8t+5}+2y^{8t+6}",
        "1280t^4+2560t^3+1760t^2+480t+45",
    ),
    row(
        4,
        11,
        "t,t,t,t,t,t,t,t+1,t+1,t+1,t+2,t+2,t+1,t,t-1",
        "8t+4",
        1,
        "1+6y^{8t+4}+5y^{8t+6}+3y^{8t+8}+y^{8t+10}",
        "1280t^4+3456t^3+3248t^2+1240t+161",
    ),
    row(
        4,
        12,
        "t,t,t,t,t+1,t,t+1,t+2,t+2,t+1,t+1,t+1,t+1,t-1,t-1",
        "8t+5",
        1,
        "1+6y^{8t+5}+4y^{8t+6}+y^{8t+7}+3y^{8t+8}+y^{8t+11}",
        "1280t^4+4096t^3+4496t^2+2064t+339",
    ),
    row(
        4,
        14,
        "t,t,t,t,t+1,t,t+1,t+2,t+2,t+2,t+1,t+2,t,t,t-1",
        "8t+6",
        1,
        "1+8y^{8t+6}+4y^{8t+8}+2y^{8t+10}+y^{8t+12}",
        "1280t^4+4736t^3+6064t^2+3208t+597",
    ),
    row(
        4,
        0,
        "t,t,t,t,t,t,t,t,t,t-1,t-1,t,t,t-1,t-1",
        "8t-2",
        1,
        "1+y^{8t-2}+4y^{8t-1}+5y^{8t}+4y^{8t+1}+y^{8t+2}",
        "1280t^4-256t^3-80t^2+8t+1",
    ),
];

pub const DIM5_FAMILIES: [FamilyRow; 31] = [
    row(5, 3, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_-,t,t,t_+,t_+,t_-,t_-,t_-,t", "16t", 1,
        "1+8y^{16t}+9y^{16t+1}+6y^{16t+2}+6y^{16t+3}+y^{16t+4}+y^{16t+5}",
        "196608t^5+61440t^4-1024t^3-1280t^2-48t+1"),
    row(5, 4, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_-,t,t", "16t", 1,
        "1+2y^{16t}+9y^{16t+1}+10y^{16t+2}+6y^{16t+3}+3y^{16t+4}+y^{16t+5}",
        "196608t^5+69632t^4+7168t^3-32t-1"),
    row(5, 5, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+1", 0,
        "1+5y^{16t+1}+10y^{16t+2}+10y^{16t+3}+5y^{16t+4}+y^{16t+5}",
        "196608t^5+102400t^4+20480t^3+1920t^2+80t+1"),
    row(5, 7, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_+,t,t,t,t,t,t,t_+,t,t,t,t_+,t_+,t,t,t_-,t_-", "16t+2", 1,
        "1+6y^{16t+2}+9y^{16t+3}+9y^{16t+4}+6y^{16t+5}+y^{16t+7}",
        "196608t^5+192512t^4+66560t^3+9856t^2+640t+15"),
    row(5, 11, "t,t,t,t,t,t,t,t,t,t,t,t_+,t_+,t_+,t_+,t_-,t,t,t_+,t_+,t_+,t,t,t,t,t,t,t,t,t,t", "16t+4", 1,
        "1+7y^{16t+4}+9y^{16t+5}+6y^{16t+6}+6y^{16t+7}+2y^{16t+8}+y^{16t+9}",
        "196608t^5+323584t^4+195584t^3+53888t^2+6704t+301"),
    row(5, 19, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t_+,t,t,t,t_+,t,t_-,t_-,t_-,t,t_-", "16t+8", 1,
        "1+8y^{16t+8}+8y^{16t+9}+6y^{16t+10}+6y^{16t+11}+y^{16t+12}+y^{16t+13}+y^{16t+17}",
        "196608t^5+593920t^4+683008t^3+374656t^2+97904t+9697"),
    row(5, 20, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_-,t_+,t_+,t_+,t,t_+,t,t,t_-,t_+,t,t,t_-,t,t_-,t_-", "16t+9", 1,
        "1+10y^{16t+9}+10y^{16t+10}+5y^{16t+11}+5y^{16t+12}+y^{16t+15}",
        "196608t^5+684032t^4+944128t^3+647040t^2+220400t+29875"),
    row(5, 22, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t_+,t,t,t_-,t_+,t,t,t_-,t,t_-,t_-", "16t+10", 1,
        "1+10y^{16t+10}+10y^{16t+11}+5y^{16t+12}+5y^{16t+13}+y^{16t+17}",
        "196608t^5+724992t^4+1054720t^3+758400t^2+270000t+38125"),
    row(5, 26, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t_-,t_+,t,t_+,t_-,t_+,t_-,t_-", "16t+12", 1,
        "1+9y^{16t+12}+9y^{16t+13}+6y^{16t+14}+6y^{16t+15}+y^{16t+17}",
        "196608t^5+856064t^4+1480704t^3+1271168t^2+541296t+91385"),
    row(5, 1, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_-,t,t,t,t,t,t,t,t_-,t_-,t,t_+,t_+,t_-,t_-,t_-,t", "16t-1", 1,
        "1+9y^{16t-1}+8y^{16t}+6y^{16t+1}+6y^{16t+2}+y^{16t+3}+y^{16t+4}",
        "196608t^5+8192t^4-9216t^3+64t^2+64t-1"),
    row(5, 2, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_-,t,t_-,t_-,t", "16t-1", 1,
        "1+3y^{16t-1}+8y^{16t}+10y^{16t+1}+6y^{16t+2}+3y^{16t+3}+y^{16t+4}",
        "196608t^5+16384t^4-4096t^3-320t^2+16t+1"),
    row(5, 6, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_+,t,t", "16t+1", 0,
        "1+3y^{16t+1}+6y^{16t+2}+10y^{16t+3}+9y^{16t+4}+3y^{16t+5}",
        "196608t^5+135168t^4+33792t^3+3840t^2+192t+3"),
    row(5, 8, "t,t,t,t,t,t,t,t_+,t,t_+,t,t,t+2,t_-,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+2", 1,
        "1+4y^{16t+2}+9y^{16t+3}+7y^{16t+4}+6y^{16t+5}+2y^{16t+6}+y^{16t+7}+2y^{16t+8}",
        "196608t^5+212992t^4+82944t^3+14144t^2+1008t+23"),
    row(5, 9, "t,t,t,t,t,t_+,t_+,t,t,t_+,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+3", 0,
        "1+6y^{16t+3}+9y^{16t+4}+9y^{16t+5}+6y^{16t+6}+y^{16t+9}",
        "196608t^5+249856t^4+118784t^3+25728t^2+2448t+81"),
    row(5, 10, "t,t,t,t,t,t,t_+,t_+,t,t+2,t,t,t+2,t_-,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+3", 1,
        "1+6y^{16t+3}+8y^{16t+4}+5y^{16t+5}+5y^{16t+6}+4y^{16t+7}+y^{16t+8}+y^{16t+9}+y^{16t+10}",
        "196608t^5+286720t^4+150528t^3+33984t^2+3088t+91"),
    row(5, 12, "t,t,t,t,t,t_+,t_+,t_+,t,t+2,t,t_+,t+2,t_-,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+4", 1,
        "1+6y^{16t+4}+8y^{16t+5}+5y^{16t+6}+5y^{16t+7}+3y^{16t+8}+2y^{16t+9}+y^{16t+10}+y^{16t+11}",
        "196608t^5+356352t^4+240640t^3+73344t^2+9472t+349"),
    row(5, 13, "t,t,t,t_+,t,t_+,t+2,t,t_+,t_+,t,t_+,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+5", 0,
        "1+8y^{16t+5}+9y^{16t+6}+5y^{16t+7}+5y^{16t+8}+2y^{16t+9}+y^{16t+10}+y^{16t+11}",
        "196608t^5+389120t^4+291840t^3+101568t^2+15792t+803"),
    row(5, 14, "t,t,t,t_+,t,t_+,t_+,t_+,t_+,t_+,t_+,t,t_+,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+5", 0,
        "1+4y^{16t+5}+5y^{16t+6}+9y^{16t+7}+9y^{16t+8}+2y^{16t+9}+y^{16t+10}+y^{16t+11}",
        "196608t^5+421888t^4+343040t^3+129536t^2+21808t+1167"),
    row(5, 15, "t,t,t,t+2,t_+,t_+,t_+,t,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+6", 0,
        "1+8y^{16t+6}+9y^{16t+7}+4y^{16t+8}+6y^{16t+9}+2y^{16t+10}+y^{16t+11}+y^{16t+12}",
        "196608t^5+458752t^4+405504t^3+166464t^2+30496t+1797"),
    row(5, 17, "t,t,t,t+2,t_+,t_+,t_+,t_+,t_+,t_+,t+2,t,t_+,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+7", 0,
        "1+9y^{16t+7}+8y^{16t+8}+4y^{16t+9}+6y^{16t+10}+y^{16t+11}+y^{16t+12}+2y^{16t+13}",
        "196608t^5+528384t^4+539648t^3+256256t^2+54080t+3575"),
    row(5, 18, "t,t,t,t+2,t,t+2,t+2,t,t_+,t_+,t_+,t_+,t+2,t_+,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t", "16t+7", 0,
        "1+6y^{16t+7}+7y^{16t+8}+6y^{16t+9}+5y^{16t+10}+3y^{16t+11}+2y^{16t+12}+y^{16t+14}+y^{16t+15}",
        "196608t^5+569344t^4+624640t^3+316928t^2+70368t+4555"),
    row(5, 21, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t,t,t,t_+,t,t,t_+,t,t,t,t,t", "16t+9", 0,
        "1+6y^{16t+9}+6y^{16t+10}+9y^{16t+11}+9y^{16t+12}+y^{16t+15}",
        "196608t^5+638976t^4+802816t^3+484544t^2+139264t+15015"),
    row(5, 23, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t,t,t_+,t_+,t,t,t_+,t_+,t,t,t,t", "16t+10", 0,
        "1+4y^{16t+10}+9y^{16t+11}+9y^{16t+12}+6y^{16t+13}+2y^{16t+14}+y^{16t+15}",
        "196608t^5+704512t^4+986112t^3+670912t^2+220560t+27811"),
    row(5, 24, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t_+,t_+,t,t_+,t,t_+,t_+,t,t,t,t,t", "16t+11", 0,
        "1+9y^{16t+11}+9y^{16t+12}+6y^{16t+13}+6y^{16t+14}+y^{16t+15}",
        "196608t^5+745472t^4+1114112t^3+819264t^2+296032t+41999"),
    row(5, 25, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t,t_+,t,t_+,t_+,t_+,t_+,t,t_+,t,t,t", "16t+11", 0,
        "1+7y^{16t+11}+7y^{16t+12}+6y^{16t+13}+6y^{16t+14}+3y^{16t+15}+2y^{16t+16}",
        "196608t^5+753664t^4+1132544t^3+832448t^2+298688t+41751"),
    row(5, 27, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t", "16t+12", 0,
        "1+4y^{16t+12}+9y^{16t+13}+9y^{16t+14}+6y^{16t+15}+y^{16t+16}+y^{16t+17}+y^{16t+18}",
        "196608t^5+819200t^4+1344512t^3+1085376t^2+430352t+66915"),
    row(5, 28, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t_+,t_+,t,t_+,t,t_+,t_+,t_+,t_+,t,t_+,t_+,t,t", "16t+13", 0,
        "1+9y^{16t+13}+9y^{16t+14}+6y^{16t+15}+5y^{16t+16}+y^{16t+17}+y^{16t+18}",
        "196608t^5+860160t^4+1495040t^3+1290112t^2+552592t+93971"),
    row(5, 29, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t,t,t,t,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t", "16t+13", 0,
        "1+5y^{16t+13}+5y^{16t+14}+10y^{16t+15}+9y^{16t+16}+y^{16t+17}+y^{16t+18}",
        "196608t^5+884736t^4+1576960t^3+1390528t^2+606016t+104319"),
    row(5, 30, "t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t_+,t,t_+,t,t_+,t_+,t,t_+,t_+,t_+,t,t_+,t_+,t_+,t_+,t,t,t_+", "16t+14", 0,
        "1+9y^{16t+14}+9y^{16t+15}+5y^{16t+16}+6y^{16t+17}+y^{16t+18}+y^{16t+19}",
        "196608t^5+913408t^4+1688576t^3+1552448t^2+709760t+129085"),
    row(5, 0, "t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t,t_-,t_-,t,t_-,t_-,t_-", "16t-2", 1,
        "1+3y^{16t-2}+9y^{16t-1}+9y^{16t}+6y^{16t+1}+3y^{16t+2}+y^{16t+3}",
        "196608t^5-36864t^4-4096t^3+640t^2+16t-1"),
    row(5, 16, "t,t,t,t,t,t,t,t,t,t,t,t_+,t,t+2,t+2,t,t_+,t,t_+,t_+,t_+,t_+,t,t,t,t,t_+,t,t,t,t", "16t+6", 0,
        "1+6y^{16t+6}+7y^{16t+7}+4y^{16t+8}+6y^{16t+9}+4y^{16t+10}+3y^{16t+11}+y^{16t+12}",
        "196608t^5+471040t^4+424960t^3+179328t^2+35248t+2589"),
];

/// A code given by the `k` rows of `M` in `[I_k | M]`, encoded in octal.
#[derive(Clone, Copy, Debug)]
pub struct OctalEntry {
    pub name: &'static str,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub octal: &'static str,
}

const fn oct(name: &'static str, n: usize, k: usize, d: usize, octal: &'static str) -> OctalEntry {
    OctalEntry { name, n, k, d, octal }
}

pub const DIM4_GENERATORS: [OctalEntry; 21] = [
    oct("M_{22,1}", 22, 4, 11, "617170773600001777475345"),
    oct("M_{22,2}", 22, 4, 11, "633330767460001777475345"),
    oct("M_{23,1}", 23, 4, 12, "7066743767400003777533415b"),
    oct("M_{26,1}", 26, 4, 13, "74607433743630000077774773714a"),
    oct("M_{26,2}", 26, 4, 13, "63653061761714000077771676540b"),
    oct("M_{27,1}", 27, 4, 14, "760663616177700000177775750755ba"),
    oct("M_{30,1}", 30, 4, 16, "7074633617703754000007777766174433ab"),
    oct("M_{30,2}", 30, 4, 15, "3746066317361730000003777767251176ab"),
    oct("M_{30,3}", 30, 4, 15, "5147543306363674000003777767251176ab"),
    oct("M_{30,4}", 30, 4, 15, "7436630317741714000003777751676754ba"),
    oct("M_{30,5}", 30, 4, 15, "7306663617773600000003777764564745aa"),
    oct("M_{30,6}", 30, 4, 15, "3615263617767700000003777764564745aa"),
    oct("M_{30,7}", 30, 4, 15, "7314633617743740000003777764564745aa"),
    oct("M_{30,8}", 30, 4, 15, "7707043617363614000003777764564745aa"),
    oct("M_{30,9}", 30, 4, 15, "7317063617761714000003777764564745aa"),
    oct("M_{30,10}", 30, 4, 15, "3615700757303746000003777764564745aa"),
    oct("M_{31,1}", 31, 4, 16, "554633154717077600000077777672511762"),
    oct("M_{31,2}", 31, 4, 16, "730661730777077000000077777137753663"),
    oct("M_{31,3}", 31, 4, 16, "347474036774170660000077777516767544"),
    oct("M_{31,4}", 31, 4, 16, "760374630777633000000077777172511762"),
    oct("M_{31,5}", 31, 4, 16, "547433154774077600000077777172511762"),
];

pub const DIM5_GENERATORS: [OctalEntry; 20] = [
    oct("M_{25,1}", 25, 5, 12, "273153117315434776000007777760547b"),
    oct("M_{25,2}", 25, 5, 12, "546617117315434776000007777760547b"),
    oct("M_{25,3}", 25, 5, 12, "323615531466634773000007777760547b"),
    oct("M_{25,4}", 25, 5, 12, "465630761547437636000007777266633a"),
    oct("M_{25,5}", 25, 5, 12, "466530761547437636000007777266633a"),
    oct("M_{25,6}", 25, 5, 12, "236363174077037770000007776616632b"),
    oct("M_{25,7}", 25, 5, 12, "073663166617037336000007776616632b"),
    oct("M_{25,8}", 25, 5, 12, "263531530747437336000007776616632b"),
    oct("M_{27,1}", 27, 5, 13, "263663176303615761714000037776375746aa"),
    oct("M_{28,1}", 28, 5, 14, "43663307741547434377600000377773721733a"),
    oct("M_{29,1}", 29, 5, 14, "4365154676031760775570000001777732725475"),
    oct("M_{29,2}", 29, 5, 14, "1627171457614660775670000001777732725475"),
    oct("M_{29,3}", 29, 5, 14, "7303615454636660775554000001777732725475"),
    oct("M_{29,4}", 29, 5, 14, "7155415454770660774374000001777732725475"),
    oct("M_{29,5}", 29, 5, 14, "7164314676154360774374000001777732725475"),
    oct("M_{29,6}", 29, 5, 14, "4367714654754360774176000001777732725475"),
    oct("M_{29,7}", 29, 5, 14, "5317606654746630774155400001777732725475"),
    oct("M_{29,8}", 29, 5, 14, "4353606654636630774155400001777732725475"),
    oct("M_{29,9}", 29, 5, 14, "5317606654636630774155400001777732725475"),
    oct("M_{30,1}", 30, 5, 15, "45571433147570361760776000001777747566530bb"),
];

/// LCD witnesses `[I_5 | M_n]` listed as plain binary rows.
#[derive(Clone, Copy, Debug)]
pub struct BinaryEntry {
    pub name: &'static str,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub rows: [&'static str; 5],
}

pub const LCD_WITNESSES: [BinaryEntry; 4] = [
    BinaryEntry {
        name: "M_19",
        n: 19,
        k: 5,
        d: 8,
        rows: [
            "00000001111111",
            "01110011101110",
            "01011100111110",
            "10011001010101",
            "11101100100101",
        ],
    },
    BinaryEntry {
        name: "M_20",
        n: 20,
        k: 5,
        d: 9,
        rows: [
            "000000011111111",
            "000111101001110",
            "101011011100101",
            "110111010001001",
            "011101100111111",
        ],
    },
    BinaryEntry {
        name: "M_22",
        n: 22,
        k: 5,
        d: 10,
        rows: [
            "00000000111111111",
            "10111101010011010",
            "10100110011100011",
            "11001011101110010",
            "11110010110110101",
        ],
    },
    BinaryEntry {
        name: "M_26",
        n: 26,
        k: 5,
        d: 12,
        rows: [
            "000000000011111111111",
            "100111111011111001100",
            "011101111101101111000",
            "010010011111000101011",
            "111100001010001011110",
        ],
    },
];

/// Published number of inequivalent `[n, k, d]` codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountCell {
    /// Column of the source table, `(n, d)` of the top-dimension code.
    pub column: (usize, usize),
    /// Dimension of the table the cell belongs to.
    pub table_k: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `None` for a dash.
    pub count: Option<usize>,
}

/// Rows `N_{n-1,3,d}`, `N_{n-1,3,d+1}`, `N_{n-2,2,d..d+3}` and `N_{n,4,d}`
/// for each column `(n, d)` of the dimension-4 count table.
pub const DIM4_COUNT_COLUMNS: [(usize, usize); 7] =
    [(22, 11), (23, 12), (26, 13), (27, 14), (30, 16), (30, 15), (31, 16)];
pub const DIM4_TOP: [usize; 7] = [2, 1, 2, 1, 1, 9, 5];
pub const DIM4_K3: [[Option<usize>; 7]; 2] = [
    [Some(6), Some(4), Some(13), Some(7), Some(4), Some(27), Some(16)],
    [Some(1), None, Some(1), None, None, Some(4), None],
];
pub const DIM4_K2: [[Option<usize>; 7]; 4] = [
    [Some(10), Some(10), Some(15), Some(15), Some(15), Some(21), Some(21)],
    [Some(6), Some(3), Some(10), Some(6), Some(6), Some(15), Some(10)],
    [Some(1), Some(1), Some(3), Some(3), Some(3), Some(6), Some(6)],
    [None, None, Some(1), None, None, Some(3), Some(1)],
];

pub const DIM5_COUNT_COLUMNS: [(usize, usize); 5] = [(25, 12), (27, 13), (28, 14), (29, 14), (30, 15)];
pub const DIM5_TOP: [usize; 5] = [8, 1, 1, 9, 1];
pub const DIM5_K4: [usize; 5] = [11, 2, 1, 13, 1];
pub const DIM5_K3: [[Option<usize>; 5]; 2] = [
    [Some(16), Some(13), Some(7), Some(28), Some(6)],
    [None, Some(1), None, Some(1), Some(1)],
];
pub const DIM5_K2: [[Option<usize>; 5]; 4] = [
    [Some(15), Some(15), Some(15), Some(21), Some(15)],
    [Some(6), Some(10), Some(6), Some(10), Some(10)],
    [Some(3), Some(3), Some(3), Some(6), Some(3)],
    [None, Some(1), None, Some(1), Some(1)],
];

/// Every dimension-2 and dimension-3 cell of both count tables.
pub fn small_dimension_count_cells() -> Vec<CountCell> {
    let mut cells = Vec::new();
    for (c, &(n, d)) in DIM4_COUNT_COLUMNS.iter().enumerate() {
        for (off, row) in DIM4_K3.iter().enumerate() {
            cells.push(CountCell {
                column: (n, d),
                table_k: 4,
                n: n - 1,
                k: 3,
                d: d + off,
                count: row[c],
            });
        }
        for (off, row) in DIM4_K2.iter().enumerate() {
            cells.push(CountCell {
                column: (n, d),
                table_k: 4,
                n: n - 2,
                k: 2,
                d: d + off,
                count: row[c],
            });
        }
    }
    for (c, &(n, d)) in DIM5_COUNT_COLUMNS.iter().enumerate() {
        for (off, row) in DIM5_K3.iter().enumerate() {
            cells.push(CountCell {
                column: (n, d),
                table_k: 5,
                n: n - 2,
                k: 3,
                d: d + off,
                count: row[c],
            });
        }
        for (off, row) in DIM5_K2.iter().enumerate() {
            cells.push(CountCell {
                column: (n, d),
                table_k: 5,
                n: n - 3,
                k: 2,
                d: d + off,
                count: row[c],
            });
        }
    }
    cells
}

/// Largest minimum weight of LCD `[n, k]` codes for `17 <= n <= 24`,
/// `4 <= k <= n - 5`; row `i` is `n = 17 + i`, entry `j` is `k = 4 + j`.
pub const LCD_D_TABLE: [&[usize]; 8] = [
    &[8, 7, 6, 6, 6, 5, 4, 3, 3],
    &[8, 7, 7, 6, 6, 5, 4, 4, 4, 3],
    &[9, 8, 8, 7, 6, 6, 5, 4, 4, 3, 3],
    &[10, 9, 8, 7, 6, 6, 6, 5, 4, 4, 4, 3],
    &[10, 9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 3, 3],
    &[10, 10, 9, 8, 8, 7, 6, 6, 6, 5, 4, 4, 4, 3],
    &[11, 10, 9, 9, 8, 7, 7, 6, 6, 5, 4, 4, 4, 3, 3],
    &[12, 11, 10, 9, 8, 8, 8, 7, 6, 6, 5, 4, 4, 4, 4, 3],
];

/// Column types of the blocks of `M(a)` for `k = 4`, as `(r_1 … r_4)`.
pub const DIM4_COLUMN_ORDER: [&str; 15] = [
    "1111", "1110", "1101", "1011", "0111", "1100", "1010", "1001", "0110", "0101", "0011", "1000", "0100", "0010",
    "0001",
];

/// Column types of the blocks of `M(a)` for `k = 5`, as `(r_1 … r_5)`.
pub const DIM5_COLUMN_ORDER: [&str; 31] = [
    "11111", "11110", "11101", "11100", "11011", "11010", "11001", "11000", "10111", "10110", "10101", "10100",
    "10011", "10010", "10001", "10000", "01111", "01110", "01101", "01100", "01011", "01010", "01001", "01000",
    "00111", "00110", "00101", "00100", "00011", "00010", "00001",
];
