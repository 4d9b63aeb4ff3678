//! Statement tags attached to every output that asserts a geometric fact.
//!
//! Tags name the statement, not where it is printed. External results are
//! tagged by what they guarantee.

pub const INVARIANT_TABLE: &str = "bielliptic-invariant-table";
pub const HYPERBOLIC_NUM: &str = "num-is-hyperbolic-plane";
pub const RIEMANN_ROCH: &str = "riemann-roch:chi=-<v(O),v>";
pub const CANONICAL_COVER_PULLBACK: &str = "canonical-cover-pullback";
pub const INTERMEDIATE_COMPOSITE_ORDER: &str = "intermediate-cover:composite-canonical-order";
pub const INTERMEDIATE_SPLIT: &str = "intermediate-cover:split-lambda";
pub const L_OF_V: &str = "pullback-imprimitivity-l(v)";

pub const LINE_BUNDLE_AMPLE: &str = "line-bundle:ample-iff-a>0,b>0;chi=ab";
pub const LINE_BUNDLE_EFFECTIVE: &str = "line-bundle:effective=>a>=0,b>=0";
pub const SERRE_DUALITY: &str = "serre-duality:omega-numerically-trivial";
pub const WBN_NONZERO_PRODUCT: &str = "wbn:ab!=0-or-numerically-trivial";
pub const WBN_FIBER_A: &str = "wbn:class-aA0-all-components";
pub const WBN_FIBER_B: &str = "wbn:class-bB0-per-component";
pub const WBN_CLASSIFICATION: &str = "wbn:line-bundle-classification";
pub const COVER_BOUND: &str = "generic-vanishing-via-canonical-cover";
pub const GENERIC_MEMBER: &str = "generic-member-of-picard-component";

pub const BOGOMOLOV: &str = "bogomolov:v^2>=0";
pub const NONEMPTY_GENERIC: &str = "nonemptiness-for-generic-polarization";
pub const ISOTROPIC_STABLE_EXISTS: &str = "isotropic:stable-exists-iff-n*l(v)|ord(omega)";
pub const ISOTROPIC_DIVISIBLE_EMPTY: &str = "isotropic:rank-divisible-no-mu-stable";
pub const WALLS_LOCALLY_FINITE: &str = "walls:rank-weighted-bogomolov-bound";
pub const COMPONENT_COUNT: &str = "moduli-components=|H^2(S,Z)_tor|";
pub const ISOTROPIC_WBN: &str = "isotropic-wbn:n*l(v)|ord(omega)";

pub const ULRICH_CANDIDATES: &str = "ulrich:diophantine-candidates-xb+ya=rab";
pub const ULRICH_DIVISIBLE: &str = "ulrich:divisible-polarization-nef-segment";
pub const ULRICH_TORSION_TYPES: &str = "ulrich:types-1,2,3,5-all-(r,k)";
pub const ULRICH_NO_LINE_BUNDLES: &str = "ulrich:types-4,6,7-no-line-bundles";
pub const ULRICH_SPECIAL_RANK2: &str = "ulrich:stable-(2,3H,2H^2)-every-surface";
pub const ULRICH_PUSHFORWARD: &str = "ulrich:pushforward-from-intermediate-cover";
pub const ULRICH_TYPE4_RANK3: &str = "ulrich:type-4-(3,4)-via-irreducibility";
pub const ULRICH_JH_OBSTRUCTION: &str = "ulrich:jordan-holder-factors-of-divisible-isotropic";
pub const ULRICH_DUAL: &str = "ulrich:dual-E*(3H)";
pub const ULRICH_DIRECT_SUM: &str = "ulrich:direct-sums";
pub const ULRICH_DOUBLING: &str = "ulrich:rank-2r-for-multiples-of-H";

pub const IRR_INVOLUTION: &str = "irr:rational-involution-quotient-types-1,2";
pub const IRR_LOWER_BOUND: &str = "irr:lower-bound-3-without-rational-involution";
pub const IRR_UPPER_BOUND: &str = "irr:upper-bound-3-via-rank-2-good-pair";
pub const GOOD_PAIR_DEGREE: &str = "good-pair:deg<=c2(E)";
pub const STABLE_POSITIVE_SLOPE_H2: &str = "h2-vanishes:E-mu_H-stable-positive-slope";
pub const DEGREE_12_NONDIVISIBLE: &str = "degree-12:even-lattice-forbids-divisibility";
pub const DEGREE_12_GENERICALLY_FINITE: &str = "degree-12:projection-generically-finite";
pub const C2_MINIMALITY: &str = "c2-minimal-at-D^2=12";
