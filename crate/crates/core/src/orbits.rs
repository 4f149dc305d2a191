//! Symmetry orbits of solution circles and the obstruction totals they
//! carry.
//!
//! The order-8 group permutes the circles of the `2d - 3j = 1`
//! solution set; an orbit of circles is a *generating class*. Each
//! class contributes one value to the obstruction:
//!
//! * with twisted coefficients (`n = (j+1)/2` odd) the value lives in
//!   `Z/4`: eight-component classes die, four-component classes give
//!   the order-2 element `Xab`, and each two-component class gives
//!   `±Xca` according to whether its quarter-turn orientation sign and
//!   its cut-matrix determinant sign agree;
//! * with trivial coefficients (`n` even) the value lives in
//!   `Z/2 ⊕ Z/2` and is the abelianization of the class monodromy.
//!
//! A nonzero total certifies the triple `(d, j, 2)` admissible. A zero
//! total certifies nothing.
//!
//! The `2d - 3j = 0` regime has no free point; there the types form a
//! finite set acted on freely, and admissibility is certified by an odd
//! orbit count.

use crate::dihedral::{DihedralElement, HomologyClass, Subgroup, TrivialClass, TwistedClass};
use crate::dynamics::{enumerate_circles, Circle, Sign, SignPair, SignedWord, SolutionState};
use crate::jacobian::{self, RowOrder};
use crate::words::{self, Word};
use crate::Error;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Which rotation offset of the order-4 element counts as positive
/// orientation. Flipping the convention negates every orientation sign
/// and must leave all verdicts unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsilonConvention {
    /// `+1` when the rotation advances a quarter of the circle.
    #[default]
    QuarterTurn,
    /// `+1` when it advances three quarters.
    ThreeQuarterTurn,
}

/// Sign conventions threaded through the obstruction computation, so
/// that verdict invariance under convention flips is executable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Conventions {
    pub epsilon: EpsilonConvention,
    pub row_order: RowOrder,
}

/// Coefficient module selected by the parity of `n = (j+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientModule {
    /// `n` even: obstruction in `Z/2 ⊕ Z/2`.
    TrivialIntegers,
    /// `n` odd: obstruction in `Z/4`.
    TwistedIntegers,
}

impl CoefficientModule {
    pub fn for_half_length(n: u32) -> Self {
        if n.is_multiple_of(2) {
            CoefficientModule::TrivialIntegers
        } else {
            CoefficientModule::TwistedIntegers
        }
    }
}

impl fmt::Display for CoefficientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientModule::TrivialIntegers => f.write_str("Z/2+Z/2"),
            CoefficientModule::TwistedIntegers => f.write_str("Z/4"),
        }
    }
}

/// One symmetry orbit of solution circles.
#[derive(Debug, Clone)]
pub struct GeneratingClass {
    /// Least signed word over all components' compressed cycles; it
    /// always starts with `A` and carries `(+,+)`.
    pub canonical: SignedWord,
    /// The member circles, led by the chosen component (the one whose
    /// compressed cycle contains the canonical word).
    pub circles: Vec<Circle>,
    /// Setwise stabilizer of the chosen component. Always cyclic:
    /// component count times stabilizer order is 8.
    pub stabilizer: Subgroup,
    /// Stabilizer element acting as the minimal forward rotation
    /// (`length / stabilizer order` steps) on the chosen component.
    pub monodromy: DihedralElement,
    /// Orientation sign of two-component classes: compares the
    /// quarter-turn direction of the order-4 rotation with the step
    /// flow at the canonical word's position-0 state.
    pub epsilon: Option<Sign>,
    /// Determinant sign of the canonical word's cut matrix
    /// (two-component classes).
    pub eta: Option<Sign>,
    /// The class's obstruction value in the module the case selects.
    pub contribution: HomologyClass,
}

impl GeneratingClass {
    pub fn component_count(&self) -> usize {
        self.circles.len()
    }

    /// Circle length of each component (components share one length).
    pub fn circle_length(&self) -> usize {
        self.circles[0].len()
    }
}

/// Two-component class tallies for the twisted case: `alpha` counts
/// sign-agreeing classes, `gamma` sign-opposing ones, `beta` the
/// four-component classes. The obstruction total is
/// `omega = alpha + 2 beta - gamma` units of `Xca`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaCounters {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl OmegaCounters {
    pub fn omega(&self) -> i64 {
        self.alpha as i64 + 2 * self.beta as i64 - self.gamma as i64
    }

    pub fn omega_mod4(&self) -> u8 {
        self.omega().rem_euclid(4) as u8
    }
}

/// Groups the circles of the `j`-measure solution set into symmetry
/// orbits, with stabilizers, monodromy, orientation and determinant
/// signs, and per-class contributions in the module that the parity of
/// `n = (j+1)/2` selects. Classes come back sorted by canonical word.
pub fn generating_classes(
    j: u32,
    conventions: Conventions,
) -> Result<Vec<GeneratingClass>, Error> {
    let circles = enumerate_circles(j)?;
    let module = CoefficientModule::for_half_length(j.div_ceil(2));

    // Where each circle's states live, for O(1) circle lookup.
    let membership = CircleMembership::new(j, &circles)?;

    // Orbit grouping over circle indices.
    let mut class_of = alloc::vec![usize::MAX; circles.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..circles.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for g in DihedralElement::all() {
            let image = membership.circle_of(&circles[start].canonical_state().act(g));
            if class_of[image] == usize::MAX {
                class_of[image] = classes.len();
                members.push(image);
            } else {
                debug_assert_eq!(class_of[image], classes.len());
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    let mut out = Vec::with_capacity(classes.len());
    for members in classes {
        out.push(build_class(&circles, &membership, &members, module, conventions)?);
    }
    out.sort_by_key(|class| class.canonical);
    Ok(out)
}

fn build_class(
    circles: &[Circle],
    membership: &CircleMembership,
    members: &[usize],
    module: CoefficientModule,
    conventions: Conventions,
) -> Result<GeneratingClass, Error> {
    // Canonical word and the component whose compressed cycle holds it.
    let mut canonical: Option<SignedWord> = None;
    let mut chosen = members[0];
    for &idx in members {
        let least = circles[idx].compressed_cycle()[0];
        if canonical.is_none_or(|c| least < c) {
            canonical = Some(least);
            chosen = idx;
        }
    }
    let canonical = canonical.expect("classes are nonempty");

    let chosen_circle = &circles[chosen];
    let length = chosen_circle.len();

    // Setwise stabilizer of the chosen component, with each element's
    // rotation offset along the step flow.
    let anchor = chosen_circle.canonical_state();
    let mut stabilizer_elements = Vec::new();
    let mut offsets = Vec::new();
    for g in DihedralElement::all() {
        let image = anchor.act(g);
        if membership.circle_of(&image) == chosen {
            stabilizer_elements.push(g);
            offsets.push(chosen_circle.offset_of(&image).unwrap());
        }
    }
    let stabilizer = Subgroup::from_elements(&stabilizer_elements)?;
    if members.len() * stabilizer.order() != 8 {
        return Err(Error::Inconsistency(
            "component count times stabilizer order must be 8",
        ));
    }

    // Monodromy: the unique stabilizer element advancing one
    // fundamental segment.
    let segment = length / stabilizer.order();
    let monodromy = stabilizer_elements
        .iter()
        .zip(&offsets)
        .find(|&(_, &t)| t == segment % length)
        .map(|(&g, _)| g)
        .ok_or(Error::Inconsistency("no stabilizer element rotates minimally"))?;

    let (epsilon, eta) = if members.len() == 2 {
        (
            Some(orientation_sign(
                circles,
                membership,
                members,
                &canonical,
                conventions.epsilon,
            )?),
            Some(jacobian_sign(&canonical, conventions.row_order)?),
        )
    } else {
        (None, None)
    };

    let contribution = match module {
        CoefficientModule::TrivialIntegers => {
            HomologyClass::Trivial(monodromy.abelianized())
        }
        CoefficientModule::TwistedIntegers => HomologyClass::Twisted(match members.len() {
            8 => TwistedClass::ZERO,
            4 => TwistedClass::XAB,
            2 => {
                let agree = epsilon.unwrap() * eta.unwrap();
                if agree == Sign::Plus {
                    TwistedClass::XCA
                } else {
                    TwistedClass::NEG_XCA
                }
            }
            _ => {
                return Err(Error::Inconsistency(
                    "twisted contributions need 2, 4 or 8 components",
                ))
            }
        }),
    };

    let mut ordered: Vec<Circle> = Vec::with_capacity(members.len());
    ordered.push(chosen_circle.clone());
    ordered.extend(
        members
            .iter()
            .filter(|&&idx| idx != chosen)
            .map(|&idx| circles[idx].clone()),
    );

    Ok(GeneratingClass {
        canonical,
        circles: ordered,
        stabilizer,
        monodromy,
        epsilon,
        eta,
        contribution,
    })
}

/// Orientation sign of a two-component class: decompress the canonical
/// word at gap 0, find how far the order-4 rotation advances that
/// state along its own component, and compare against the convention.
/// The advance is always a quarter or three quarters of the circle.
fn orientation_sign(
    circles: &[Circle],
    membership: &CircleMembership,
    members: &[usize],
    canonical: &SignedWord,
    convention: EpsilonConvention,
) -> Result<Sign, Error> {
    let start = SolutionState::decompress(canonical, 0)?;
    let home = membership.circle_of(&start);
    if !members.contains(&home) {
        return Err(Error::Inconsistency(
            "canonical (+,+) state lies outside its class",
        ));
    }
    let circle = &circles[home];
    let length = circle.len();
    let from = circle.offset_of(&start).unwrap();
    let to = circle
        .offset_of(&start.act(DihedralElement::ROTATION))
        .ok_or(Error::Inconsistency(
            "order-4 rotation does not preserve the component",
        ))?;
    let advance = (to + length - from) % length;
    let quarter = if advance == length / 4 {
        true
    } else if advance == 3 * length / 4 {
        false
    } else {
        return Err(Error::Inconsistency("rotation advance is not a quarter turn"));
    };
    Ok(match convention {
        EpsilonConvention::QuarterTurn => Sign::Plus.flipped_if(!quarter),
        EpsilonConvention::ThreeQuarterTurn => Sign::Plus.flipped_if(quarter),
    })
}

/// Determinant sign of the canonical word's cut matrix.
fn jacobian_sign(canonical: &SignedWord, order: RowOrder) -> Result<Sign, Error> {
    let config = jacobian::build_configuration(canonical)?;
    jacobian::det_sign(&jacobian::sign_matrix(&config, order)?)
}

/// State-to-circle lookup across a full enumeration.
struct CircleMembership {
    space: crate::dynamics::StateSpace,
    circle_of: Vec<u32>,
}

impl CircleMembership {
    fn new(j: u32, circles: &[Circle]) -> Result<Self, Error> {
        let space = crate::dynamics::StateSpace::new(j)?;
        let mut circle_of = alloc::vec![u32::MAX; space.len()];
        for (idx, circle) in circles.iter().enumerate() {
            for state in circle.states() {
                circle_of[space.index(state)] = idx as u32;
            }
        }
        debug_assert!(circle_of.iter().all(|&c| c != u32::MAX));
        Ok(Self { space, circle_of })
    }

    fn circle_of(&self, state: &SolutionState) -> usize {
        self.circle_of[self.space.index(state)] as usize
    }
}

/// Outcome of the free-point obstruction computation for
/// `(d, j) = ((3j+1)/2, j)`.
#[derive(Debug, Clone)]
pub struct Delta1Outcome {
    pub j: u32,
    pub d: u32,
    /// Half the solution-word length, `n = (j+1)/2`.
    pub n: u32,
    pub module: CoefficientModule,
    pub classes: Vec<GeneratingClass>,
    /// Two-component tallies; present exactly in the twisted case.
    pub counters: Option<OmegaCounters>,
    /// Self-conjugate-count cross-check `(O1, O2)`; present exactly in
    /// the trivial case (`n = 2m`): `O1` sums `A(k)` over odd divisors
    /// `k` of `n`, `O2` over even ones.
    pub closed_form: Option<(u64, u64)>,
    pub total: HomologyClass,
    pub admissible: bool,
    pub notes: Vec<String>,
}

/// Runs the full `2d - 3j = 1` pipeline for `j` measures: enumerate,
/// group, sign, and sum. Admissibility is claimed only on a nonzero
/// total; a zero total yields no conclusion.
pub fn obstruction_delta1(j: u32, conventions: Conventions) -> Result<Delta1Outcome, Error> {
    let classes = generating_classes(j, conventions)?;
    let n = j.div_ceil(2);
    let d = (3 * j).div_ceil(2);
    let module = CoefficientModule::for_half_length(n);
    let mut notes = Vec::new();

    let (total, counters, closed_form) = match module {
        CoefficientModule::TwistedIntegers => {
            let mut counters = OmegaCounters {
                alpha: 0,
                beta: 0,
                gamma: 0,
            };
            let mut total = TwistedClass::ZERO;
            for class in &classes {
                match class.component_count() {
                    4 => counters.beta += 1,
                    2 => {
                        if class.epsilon == class.eta {
                            counters.alpha += 1;
                        } else {
                            counters.gamma += 1;
                        }
                    }
                    _ => {}
                }
                let HomologyClass::Twisted(c) = class.contribution else {
                    return Err(Error::Inconsistency("mixed coefficient modules"));
                };
                total = total + c;
            }
            if total != TwistedClass::new(counters.omega()) {
                return Err(Error::Inconsistency(
                    "class contributions disagree with the counter total",
                ));
            }
            (HomologyClass::Twisted(total), Some(counters), None)
        }
        CoefficientModule::TrivialIntegers => {
            let mut total = TrivialClass::ZERO;
            for class in &classes {
                let HomologyClass::Trivial(c) = class.contribution else {
                    return Err(Error::Inconsistency("mixed coefficient modules"));
                };
                total = total + c;
            }
            (
                HomologyClass::Trivial(total),
                None,
                Some(closed_form_z2z2(n as u64 / 2)),
            )
        }
    };

    if j == 3 {
        notes.push(String::from(
            "note: the order-2 subgroup {e, ab} preserves each component of the ABAB class, \
             but its full setwise stabilizer is the order-4 rotation subgroup {e, ab, ga, gb}; \
             the class has 2 components (96 = 4*16 + 2*16) and the verdict is the same under \
             either reading",
        ));
    }

    Ok(Delta1Outcome {
        j,
        d,
        n,
        module,
        classes,
        counters,
        closed_form,
        total,
        admissible: !total.is_zero(),
        notes,
    })
}

/// The closed-form coordinates for the trivial-coefficient case with
/// `n = 2m`: sums of self-conjugate-primitive counts `A(k)` over the
/// odd and even divisors `k` of `2m`. Their parities are the two
/// `Z/2` coordinates of the obstruction total, as an unordered pair.
pub fn closed_form_z2z2(m: u64) -> (u64, u64) {
    assert!(m >= 1);
    let mut odd = 0;
    let mut even = 0;
    for k in 1..=2 * m {
        if (2 * m).is_multiple_of(k) {
            let a = words::count_star_primitive(k);
            if k % 2 == 1 {
                odd += a;
            } else {
                even += a;
            }
        }
    }
    (odd, even)
}

/// Outcome of the `2d - 3j = 0` parity test for `(d, j) = (3m, 2m)`.
#[derive(Debug, Clone)]
pub struct Delta0Outcome {
    pub m: u32,
    pub j: u32,
    pub d: u32,
    /// Size of the type set: `4 · C(2m, m)`.
    pub type_count: u64,
    /// Directly enumerated orbit count under the order-8 action.
    pub orbit_count: u64,
    /// `C(2m-1, m-1)`, the closed form the direct count must equal.
    pub closed_form: u128,
    /// Odd orbit count certifies admissibility.
    pub admissible: bool,
    pub notes: Vec<String>,
}

/// Enumerates the `(3m, 2m, 2)` solution types (sign pairs together
/// with balanced words of length `2m`, no free point) and counts
/// orbits of the order-8 action directly. The triple is admissible
/// exactly when the count is odd.
pub fn obstruction_delta0(m: u32) -> Result<Delta0Outcome, Error> {
    if m < 1 || 2 * m as usize > 24 {
        return Err(Error::JOutOfRange { j: 2 * m, max: 24 });
    }
    let len = 2 * m as usize;
    let mut type_count = 0u64;
    let mut orbit_count = 0u64;
    for bits in 0..1u64 << len {
        let word = Word::from_bits(bits as u32, len);
        if !word.is_balanced() {
            continue;
        }
        for s1 in [Sign::Plus, Sign::Minus] {
            for s2 in [Sign::Plus, Sign::Minus] {
                let ty = SignedWord::new(word, SignPair::new(s1, s2));
                type_count += 1;
                // Count each orbit at its least member.
                if DihedralElement::all().iter().all(|&g| ty.act(g) >= ty) {
                    orbit_count += 1;
                }
            }
        }
    }

    let closed_form = words::binomial(2 * m as u64 - 1, m as u64 - 1);
    if orbit_count as u128 != closed_form {
        return Err(Error::Inconsistency(
            "direct orbit count disagrees with the closed form",
        ));
    }

    let notes = alloc::vec![String::from(
        "note: admissibility is asserted only from the computed orbit parity; the count \
         equals C(2m-1, m-1), odd exactly when m is a power of two in the tested range. \
         An alternative reading placing the admissible cases at m = 2^q - 1 contradicts \
         this parity and the tight bound at j = 2^m, and is not used",
    )];

    Ok(Delta0Outcome {
        m,
        j: 2 * m,
        d: 3 * m,
        type_count,
        orbit_count,
        closed_form,
        admissible: orbit_count % 2 == 1,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::binomial;
    use core::str::FromStr;

    fn classes(j: u32) -> Vec<GeneratingClass> {
        generating_classes(j, Conventions::default()).unwrap()
    }

    fn sw(s: &str) -> SignedWord {
        SignedWord::from_str(s).unwrap()
    }

    #[test]
    fn j3_has_two_classes() {
        let classes = classes(3);
        assert_eq!(classes.len(), 2);

        let first = &classes[0];
        assert_eq!(first.canonical, sw("AABB++"));
        assert_eq!(first.component_count(), 4);
        assert_eq!(
            first.stabilizer.elements(),
            &[
                DihedralElement::IDENTITY,
                DihedralElement::SWAP,
            ]
        );
        assert_eq!(first.monodromy, DihedralElement::SWAP);
        assert_eq!(
            first.contribution,
            HomologyClass::Trivial(TrivialClass::Y)
        );

        let second = &classes[1];
        assert_eq!(second.canonical, sw("ABAB++"));
        assert_eq!(second.component_count(), 2);
        assert_eq!(second.stabilizer.order(), 4);
        assert!(second.stabilizer.contains(DihedralElement::ROTATION));
        assert_eq!(
            second.contribution,
            HomologyClass::Trivial(TrivialClass::Z)
        );
    }

    #[test]
    fn j5_has_three_classes() {
        let classes = classes(5);
        assert_eq!(classes.len(), 3);
        let canonicals: Vec<_> = classes.iter().map(|c| c.canonical).collect();
        assert_eq!(
            canonicals,
            [sw("AAABBB++"), sw("AABABB++"), sw("ABABAB++")]
        );
        let components: Vec<_> = classes.iter().map(|c| c.component_count()).collect();
        assert_eq!(components, [2, 4, 2]);

        // Both two-component classes are rotated three quarters, so the
        // quarter-turn convention gives both a minus orientation.
        assert_eq!(classes[0].epsilon, Some(Sign::Minus));
        assert_eq!(classes[2].epsilon, Some(Sign::Minus));
        // Determinant signs straight off the cut matrices.
        assert_eq!(classes[0].eta, Some(Sign::Plus));
        assert_eq!(classes[2].eta, Some(Sign::Minus));
        // Contributions cancel between them and leave the four-component
        // class's order-2 element.
        assert_eq!(
            classes[0].contribution,
            HomologyClass::Twisted(TwistedClass::NEG_XCA)
        );
        assert_eq!(
            classes[1].contribution,
            HomologyClass::Twisted(TwistedClass::XAB)
        );
        assert_eq!(
            classes[2].contribution,
            HomologyClass::Twisted(TwistedClass::XCA)
        );
    }

    #[test]
    fn class_counting_identity() {
        for j in [1u32, 3, 5, 7, 9] {
            let n = u64::from(j + 1) / 2;
            let covered: usize = classes(j)
                .iter()
                .map(|c| c.component_count() * c.circles[0].compressed_cycle().len())
                .sum();
            assert_eq!(covered as u128, 4 * binomial(2 * n, n), "j = {j}");
        }
    }

    #[test]
    fn stabilizer_orders_multiply_to_eight() {
        for j in [1u32, 3, 5, 7] {
            for class in classes(j) {
                assert_eq!(class.component_count() * class.stabilizer.order(), 8);
                assert!(class.stabilizer.contains(class.monodromy));
                let expected = class.circle_length() / class.stabilizer.order();
                // Monodromy advances exactly one fundamental segment,
                // and the stabilizer acts freely on the component.
                let anchor = class.circles[0].canonical_state();
                let image = anchor.act(class.monodromy);
                assert_eq!(
                    class.circles[0].offset_of(&image),
                    Some(expected % class.circle_length())
                );
                for &g in class.stabilizer.elements() {
                    if g != DihedralElement::IDENTITY {
                        assert_ne!(anchor.act(g), *anchor, "j = {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn compress_lands_in_the_own_class_everywhere() {
        // Every state's compressed word appears among the samples of
        // its own class (not necessarily of its own circle).
        for j in [3u32, 5] {
            let classes = classes(j);
            for class in &classes {
                let samples: alloc::collections::BTreeSet<SignedWord> = class
                    .circles
                    .iter()
                    .flat_map(|c| c.compressed_cycle())
                    .collect();
                for circle in &class.circles {
                    for state in circle.states() {
                        assert!(samples.contains(&state.compress()));
                    }
                }
            }
        }
    }

    #[test]
    fn monodromy_abelianization_is_component_independent() {
        // Conjugate stabilizers across components abelianize equally.
        for class in classes(7) {
            let reference = class.monodromy.abelianized();
            for g in DihedralElement::all() {
                assert_eq!(
                    g.compose(class.monodromy).compose(g.inverse()).abelianized(),
                    reference
                );
            }
        }
    }

    #[test]
    fn delta1_852_is_admissible() {
        let outcome = obstruction_delta1(5, Conventions::default()).unwrap();
        assert_eq!(outcome.d, 8);
        assert_eq!(outcome.module, CoefficientModule::TwistedIntegers);
        let counters = outcome.counters.unwrap();
        assert_eq!(
            (counters.alpha, counters.beta, counters.gamma),
            (1, 1, 1)
        );
        assert_eq!(counters.omega(), 2);
        assert_eq!(outcome.total, HomologyClass::Twisted(TwistedClass::XAB));
        assert!(outcome.admissible);
    }

    #[test]
    fn delta1_53_is_admissible() {
        let outcome = obstruction_delta1(3, Conventions::default()).unwrap();
        assert_eq!(outcome.d, 5);
        assert_eq!(outcome.module, CoefficientModule::TrivialIntegers);
        assert!(outcome.counters.is_none());
        assert!(!outcome.total.is_zero());
        assert!(outcome.admissible);
        assert!(!outcome.notes.is_empty());
    }

    #[test]
    fn delta1_trivial_total_matches_closed_form_pair() {
        for j in [3u32, 7, 11] {
            let outcome = obstruction_delta1(j, Conventions::default()).unwrap();
            let (o1, o2) = outcome.closed_form.unwrap();
            let HomologyClass::Trivial(total) = outcome.total else {
                panic!("trivial case expected");
            };
            // Total = u·Y + v·Z in the basis {X, Y}: v is the X
            // coordinate, u the rest.
            let v = total.x as u64;
            let u = (total.y ^ total.x) as u64;
            let mut direct = [u, v];
            let mut closed = [o1 % 2, o2 % 2];
            direct.sort_unstable();
            closed.sort_unstable();
            assert_eq!(direct, closed, "j = {j}");
        }
    }

    #[test]
    fn epsilon_convention_flip_negates_omega() {
        let standard = obstruction_delta1(5, Conventions::default()).unwrap();
        let flipped = obstruction_delta1(
            5,
            Conventions {
                epsilon: EpsilonConvention::ThreeQuarterTurn,
                row_order: RowOrder::Standard,
            },
        )
        .unwrap();
        let a = standard.counters.unwrap();
        let b = flipped.counters.unwrap();
        assert_eq!(a.omega_mod4(), (-b.omega()).rem_euclid(4) as u8);
        assert_eq!(standard.admissible, flipped.admissible);
    }

    #[test]
    fn closed_form_small_values() {
        assert_eq!(closed_form_z2z2(1), (1, 1));
        // Nonzero parities at every power of two through 8.
        for p in 0..=3u32 {
            let (o1, o2) = closed_form_z2z2(1 << p);
            assert!(
                o1 % 2 == 1 || o2 % 2 == 1,
                "m = 2^{p} must give a nonzero pair"
            );
        }
    }

    #[test]
    fn delta0_small_cases() {
        let one = obstruction_delta0(1).unwrap();
        assert_eq!((one.orbit_count, one.admissible), (1, true));
        assert_eq!(one.type_count, 8);

        let two = obstruction_delta0(2).unwrap();
        assert_eq!((two.orbit_count, two.admissible), (3, true));

        let three = obstruction_delta0(3).unwrap();
        assert_eq!((three.orbit_count, three.admissible), (10, false));
    }

    #[test]
    fn delta0_matches_closed_form_through_six() {
        for m in 1..=6u32 {
            let outcome = obstruction_delta0(m).unwrap();
            assert_eq!(outcome.orbit_count as u128, outcome.closed_form);
            assert_eq!(outcome.admissible, [1, 2, 4].contains(&m));
        }
    }
}
