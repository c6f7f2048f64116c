//! Coefficient payloads of the factored evaluation schemes, stored as
//! correctly rounded doubles at the full precision available.
//!
//! The degree-9 cosine/sine set is regenerated from the Bessel-series
//! definition at theta = 0.2143 and rounded to doubles: the corresponding
//! published figures carry a global sign error on the sine part and only
//! about ten accurate digits, which would spoil the round-off-level
//! accuracy target. Every other set is transcribed verbatim. A checksum
//! test re-expands each factored sequence symbolically and compares it with
//! the series coefficients, so any transcription slip fails loudly.

/// Complex constant as a `(re, im)` pair.
pub type C2 = (f64, f64);

// ----- exponential scheme, degree 2 (1 product) -----
pub mod m2 {
    use super::C2;
    pub const ALPHA0: C2 = (0.9999999999999999999998, 0.0);
    pub const ALPHA1: C2 = (0.0, -0.9999999999761950000001);
    pub const ALPHA2: C2 = (-0.4999999999920650000000, 0.0);
}

// ----- exponential scheme, degree 4 (2 products) -----
pub mod m4 {
    use super::C2;
    pub const ALPHA0: C2 = (0.99999999999999999997, 0.0);
    pub const ALPHA1: C2 = (0.0, -0.99999999999981067844);
    pub const ALPHA2: C2 = (-0.49999999999994320353, 0.0);
    pub const X1: C2 = (0.0, 0.16666657785001893215);
    pub const X2: C2 = (0.04166664890333648869, 0.0);
}

// ----- exponential scheme, degree 8 (3 products) -----
pub mod m8 {
    use super::C2;
    pub const X1: C2 = (0.10775, 0.0); // 431/4000
    pub const X2: C2 = (0.0, -0.02693906873598870733);
    pub const X3: C2 = (0.0, 0.66321004441662438593);
    pub const X4: C2 = (0.0, 0.54960853911436015786);
    pub const X5: C2 = (0.16200952846773660904, 0.0);
    pub const X6: C2 = (0.0, -0.01417981805211804396);
    pub const X7: C2 = (-0.03415953916892111403, 0.0);
    pub const ALPHA0: C2 = (0.99999999999999999928, 0.0);
    pub const ALPHA1: C2 = (0.0, -0.99999999999999233987);
    pub const ALPHA2: C2 = (-0.13549409636220703066, 0.0);
}

// ----- exponential scheme, degree 12 (4 products) -----
// columns hold (a_{0,j}, a_{1,j}, a_{2,j}, a_{3,j}) for B_j
pub mod m12 {
    use super::C2;
    pub const A: [[C2; 4]; 4] = [
        [
            (-6.26756985350202252845, 0.0),
            (0.0, 2.52179694712098096140),
            (0.05786296656487001838, 0.0),
            (0.0, -0.07766686408071870344),
        ],
        [
            (0.0, 0.0),
            (0.0, 1.41183797496250375498),
            (0.0, 0.0),
            (0.0, -0.00866935318616372016),
        ],
        [
            (2.69584306915332564689, 0.0),
            (0.0, -1.35910926168869260391),
            (-0.09896214548845831754, 0.0),
            (0.0, 0.01596479463299466666),
        ],
        [
            (0.0, 0.0),
            (0.0, 0.13340427306445612526),
            (0.02022602029818310774, 0.0),
            (0.0, -0.00674638241111650999),
        ],
    ];
}

// ----- exponential scheme, degree 18 (5 products) -----
pub mod m18 {
    use super::C2;
    // B_1 = a0 I + a1 A + a2 A2 + a3 A3
    pub const A1: [C2; 4] = [
        (0.0, 0.0),
        (0.12, 0.0), // 3/25
        (0.0, -0.00877476096879703859),
        (-0.00097848453523780954, 0.0),
    ];
    // B_{j+1} = b0 I + b1 A + b2 A2 + b3 A3 + b6 A6, columns j = 1..4
    pub const B: [[C2; 5]; 4] = [
        [
            (0.0, 0.0),
            (0.0, -0.66040840760771318751),
            (-1.09302278471564897987, 0.0),
            (0.0, 0.25377155817710873323),
            (0.00054374267434731225, 0.0),
        ],
        [
            (-2.58175430371188142440, 0.0),
            (0.0, -1.73033278310812419209),
            (-0.07673476833423340755, 0.0),
            (0.0, -0.00261502969893897079),
            (-0.00003400011993049304, 0.0),
        ],
        [
            (2.92377758396553673559, 0.0),
            (0.0, 1.44513300347488268510),
            (0.12408183566550450221, 0.0),
            (0.0, -0.01957157093642723948),
            (0.00002425253007433925, 0.0),
        ],
        [
            (0.0, 0.0),
            (0.0, 0.0),
            (0.0, -0.123953695858283131480),
            (-0.011202694841085592373, 0.0),
            (0.0, -0.000012367240538259896),
        ],
    ];
}

// ----- cosine/sine, degree 5 (3 products, exact sine) -----
pub mod cs5 {
    pub const ALPHA: [f64; 3] = [
        0.99999999999999988866,
        -0.49999999998536031183,
        0.04166638147997997916,
    ];
    pub const Z: [f64; 3] = [
        0.99999999999999994433,
        -0.16666666666341340086,
        0.00833328580219952161,
    ];
}

// ----- cosine/sine, degree 8 (4 products, approximate sine) -----
pub mod cs8 {
    pub const ALPHA: [f64; 3] = [
        0.99999999999999999928,
        -0.49999999999999787210,
        0.04166666666565156615,
    ];
    pub const X: [f64; 2] = [-0.00138888871939942118, 0.00002479003614491668];
    pub const Z: [f64; 4] = [
        0.85721768947064012466,
        -0.09527551139590047256,
        0.00238406908730568850,
        0.14278231052935221530,
    ];
}

// ----- cosine/sine, degree 9 (5 products, exact sine; regenerated) -----
pub mod cs9 {
    pub const ALPHA: [f64; 5] = [
        0.9999999999999999,
        -0.49999999999988043,
        0.041666666645832025,
        -0.0013888876184864954,
        2.476996656199354e-5,
    ];
    pub const Z: [f64; 5] = [
        1.0,
        -0.16666666666664273,
        0.008333333330416255,
        -0.00019841255321375033,
        2.7525696834308403e-6,
    ];
}

// ----- cosine/sine, degree 16 (6 products, approximate sine) -----
pub mod cs16 {
    pub const X: [f64; 7] = [
        0.01, // 1/100
        -0.00008035854055477845,
        -0.10743065643419630630,
        -0.12491372919298427513,
        0.00130085397953037838,
        -0.00001633763177694857,
        7.13215089463286614820e-6,
    ];
    pub const ALPHA: [f64; 3] = [
        0.99999999999999999530,
        -0.49999999999999969795,
        0.028247102741817734721,
    ];
    pub const Z: [f64; 9] = [
        0.66, // 33/50
        0.00333333333335438849,
        -0.00583333333345309522,
        0.02773310749258735833,
        0.33999999999999886261,
        -0.00034915267907803119,
        4.19573036995827807213e-6,
        -2.63931697420854364428e-6,
        -3.00240279002259730782e-6,
    ];
}

// ----- cosine polynomial of degree 24 (5 products), shared by both
// degree-24 sine variants; columns hold (a_{0,j}..a_{3,j}) for B_j -----
pub mod cs24 {
    pub const A: [[f64; 4]; 4] = [
        [
            0.39272620931352327385,
            -0.08760637124112618048,
            0.01962064507143601071,
            -0.00013421604022829771,
        ],
        [
            0.2, // 1/5
            -0.54235659842328961975,
            0.00679, // 679/100000
            -0.00002902999756981724,
        ],
        [
            0.68566773555140770915,
            -0.02578520551577453856,
            0.00019815665089300452,
            -1.10083330495602029332e-6,
        ],
        [
            0.0,
            -0.03931944346958836562,
            0.00017839382197658767,
            -1.06908694221941432625e-6,
        ],
    ];

    /// Approximate-sine variant (2 extra products, degree 49 in A).
    pub const Z_APPROX: [f64; 12] = [
        -0.01238438326981811663,
        -0.06180067679127220638,
        0.00046275599640408615,
        -9.92990416300441584763e-6,
        1.26307934615308708610,
        9.10439014880980346565e-15,
        0.14610549096048524519,
        0.00087697762149660844,
        4.12092186281469998191e-6,
        2.23743615053828476204e-8,
        0.00033015662857238333,
        -2.405371071766852323329e-7,
    ];

    /// Exact-sine variant (3 extra products).
    pub const Z_EXACT: [f64; 14] = [
        2.85247650396873609664,
        -0.23838922984354509797,
        0.01254735251131974478,
        -0.00003184984233834954,
        -7.91411934357932811110,
        -0.45584956828766694538,
        -2.34944723110594310069,
        -0.34315650534099675485,
        0.00379529409295014610,
        -0.00001509312002244718,
        -0.017, // -17/1000
        7.68145795118100472945e-9,
        -2.71896175810263278764e-11,
        0.45584956828766694538,
    ];
}
