//! Builders for the concrete families: the quantum differential Hopf
//! algebra, the bosonized affine superspace, multi-rank Taft algebras and
//! the bosonized quantum Grassmann superalgebra.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    AxiomCheck, Elem, GenKind, GroupRelation, HopfPresentation, Letter, NilGen, NilPart, Relation, SignedPow, Tensor,
    Word,
};
use crate::error::{Error, Result};
use crate::indices::{theta_exponents, MultiIndex};
use crate::qarith::{binomial, char_of, q_binom_unbalanced, Mode, Parity, ScalarQ};
use crate::superspaces::{Family, SpaceSpec};

/// A family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfFamily {
    /// `𝔇_q(m|n)`, or its restricted quotient; `minus` selects the alternate coproduct `Δ^(−)`.
    Dq { m: usize, n: usize, restricted: bool, minus: bool },
    /// `𝔄_q(m|n)`; `k_ell` imposes `𝒦(ε_i)^ℓ = 1` for `i ∈ I₀` at a root of unity.
    Aq { m: usize, n: usize, k_ell: bool },
    /// `𝒯ℋ_q(m|n)` at `ord(q) = ℓ`.
    TaftQ { m: usize, n: usize },
    /// `𝒯ℋ_μ(ℓ̄)`, or `𝒯ℋ_μ(ℓ̄|m̄)` when `ords` is given.
    TaftMu { mu: Vec<Vec<SignedPow>>, ells: Vec<u32>, ords: Option<Vec<u32>> },
    /// `𝔊_q(m|n)`, or `𝔊_q(m|n,1)` when `restricted`.
    Gq { m: usize, n: usize, restricted: bool, k_ell: bool },
}

fn theta_sp(m: usize, n: usize, i: usize, j: usize) -> SignedPow {
    let (s, e) = theta_exponents(&MultiIndex::eps(m, n, i), &MultiIndex::eps(m, n, j)).expect("same shape");
    SignedPow::signed(s.rem_euclid(2) == 1, e)
}

/// Multiplicative order of `q`.
fn order_of(mode: &Mode) -> Result<u32> {
    mode.order().ok_or_else(|| Error::InvalidParameter("a root of unity is required".into()))
}

/// Order of a signed q-power in the given mode, if finite.
fn sp_order(x: SignedPow, mode: &Mode, bound: u32) -> Option<u32> {
    (1..=bound).find(|&k| x.pow(k as i64).eval(mode).is_one())
}

fn one(mode: &Mode) -> ScalarQ {
    mode.one()
}

fn nil(k: usize) -> Letter {
    Letter::Nil(k, 1)
}

fn grp(j: usize, p: i64) -> Letter {
    Letter::Group(j, p)
}

fn commutation(mode: &Mode, names: &[String], k: usize, l: usize, c: SignedPow) -> Relation {
    Relation {
        name: format!("{} {} = {} {} {}", names[k], names[l], c.render(), names[l], names[k]),
        terms: vec![(one(mode), vec![nil(k), nil(l)]), (-c.eval(mode), vec![nil(l), nil(k)])],
    }
}

fn nilpotency(mode: &Mode, names: &[String], k: usize, p: u32) -> Relation {
    Relation { name: format!("{}^{} = 0", names[k], p), terms: vec![(one(mode), vec![Letter::Nil(k, p)])] }
}

fn conjugation(mode: &Mode, gnames: &[String], names: &[String], j: usize, k: usize, c: SignedPow) -> Relation {
    Relation {
        name: format!("{} {} {}^-1 = {} {}", gnames[j], names[k], gnames[j], c.render(), names[k]),
        terms: vec![(one(mode), vec![grp(j, 1), nil(k), grp(j, -1)]), (-c.eval(mode), vec![nil(k)])],
    }
}

fn group_word(r: &[i64]) -> Word {
    r.iter().enumerate().filter(|(_, &e)| e != 0).map(|(j, &e)| grp(j, e)).collect()
}

fn render_group(gnames: &[String], r: &[i64]) -> String {
    let parts: Vec<String> = r
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(j, &e)| if e == 1 { gnames[j].clone() } else { format!("{}^{}", gnames[j], e) })
        .collect();
    format!("{} = 1", parts.join(" "))
}

fn unit(len: usize, j: usize, e: i64) -> Vec<i64> {
    let mut v = vec![0; len];
    v[j] = e;
    v
}

/// Adds word relations for every group relation compatible with the characters.
fn finish(mut p: HopfPresentation) -> HopfPresentation {
    let mode = p.mode.clone();
    let extra: Vec<Relation> = p
        .group_relations
        .iter()
        .filter(|r| p.character_trivial(&r.exponents))
        .map(|r| Relation { name: r.name.clone(), terms: vec![(one(&mode), group_word(&r.exponents)), (-one(&mode), vec![])] })
        .collect();
    p.relations.extend(extra);
    p
}

/// Skew-primitive generator `Δ(y) = y ⊗ 1 + K ⊗ y`, `S(y) = −K^{-1} y`.
fn taft_gen(mode: &Mode, name: String, slots: usize, k: usize, group_index: usize, gname: &str) -> NilGen {
    NilGen {
        name,
        kind: GenKind::SkewPrimitive(format!("(1, {gname})")),
        key: unit(slots, k, 1),
        delta: vec![(one(mode), vec![nil(k)], vec![]), (one(mode), vec![grp(group_index, 1)], vec![nil(k)])],
        antipode: vec![(-one(mode), vec![grp(group_index, -1), nil(k)])],
    }
}

fn params_mn(m: usize, n: usize, mode: &Mode) -> Vec<(String, String)> {
    let q = match mode.order() {
        Some(d) => format!("root of unity of order {d}"),
        None => "generic".into(),
    };
    vec![("m".into(), m.to_string()), ("n".into(), n.to_string()), ("q".into(), q)]
}

/// Builds a validated presentation.
pub fn build(family: &HopfFamily, mode: &Mode) -> Result<HopfPresentation> {
    match family {
        HopfFamily::Dq { m, n, restricted, minus } => build_dq(*m, *n, *restricted, *minus, *restricted, mode),
        HopfFamily::Aq { m, n, k_ell } => build_affine(*m, *n, mode, if *k_ell { Some(order_of(mode)?) } else { None }, false),
        HopfFamily::TaftQ { m, n } => {
            let d = order_of(mode)?;
            if d <= 2 {
                return Err(Error::InvalidParameter("ord(q) must exceed 2".into()));
            }
            build_affine(*m, *n, mode, Some(d), true)
        }
        HopfFamily::TaftMu { mu, ells, ords } => build_taft_mu(mu, ells, ords.as_deref(), mode),
        HopfFamily::Gq { m, n, restricted, k_ell } => build_gq(*m, *n, *restricted, *k_ell, mode),
    }
}

fn build_dq(m: usize, n: usize, restricted: bool, minus: bool, cap_even: bool, mode: &Mode) -> Result<HopfPresentation> {
    let nn = m + n;
    if nn == 0 {
        return Err(Error::InvalidParameter("m + n must be positive".into()));
    }
    let prof = char_of(mode)?;
    let group_exp = if restricted {
        match prof.parity {
            Parity::GenericQ => return Err(Error::InvalidParameter("the restricted algebra needs a root of unity".into())),
            Parity::OddRoot => Some(prof.ell as i64),
            Parity::EvenRoot => Some(2 * prof.ell as i64),
        }
    } else {
        None
    };
    if restricted && prof.ell < 3 {
        return Err(Error::InvalidParameter("restricted families need ℓ ≥ 3".into()));
    }
    let sigma = |i: usize| i;
    let big_theta = |i: usize| nn + i;
    let tau = |j: usize| 2 * nn + (j - m);
    let mut gnames: Vec<String> = (1..=nn).map(|i| format!("s{i}")).collect();
    gnames.extend((1..=nn).map(|i| format!("Th{i}")));
    gnames.extend((m + 1..=nn).map(|j| format!("t{j}")));
    let k = gnames.len();
    let names: Vec<String> = (1..=nn).map(|i| format!("d{i}")).collect();

    let mut grels = Vec::new();
    for j in m..nn {
        let r = unit(k, tau(j), 2);
        grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
    }
    for i in 0..nn.saturating_sub(1) {
        // Θ(−ε_i + ε_{i+1}) = σ_i σ_{i+1}, with the full parity τ when i = m.
        let mut r = vec![0; k];
        r[big_theta(i)] -= 1;
        r[big_theta(i + 1)] += 1;
        r[sigma(i)] -= 1;
        r[sigma(i + 1)] -= 1;
        if i + 1 == m {
            for j in m..nn {
                r[tau(j)] -= 1;
            }
        }
        let name = format!("Th{}^-1 Th{} = s{} s{}{}", i + 1, i + 2, i + 1, i + 2, if i + 1 == m { " tau" } else { "" });
        grels.push(GroupRelation { name, exponents: r });
    }
    if let Some(l) = group_exp {
        for i in 0..nn {
            for g in [sigma(i), big_theta(i)] {
                let r = unit(k, g, l);
                grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
            }
        }
    }

    let mut chi = vec![vec![SignedPow::ONE; k]; nn];
    let mut comm = vec![vec![SignedPow::ONE; nn]; nn];
    for s in 0..nn {
        chi[s][sigma(s)] = SignedPow::signed(s >= m, -1);
        for j in 0..nn {
            chi[s][big_theta(j)] = theta_sp(m, n, s + 1, j + 1);
            comm[s][j] = theta_sp(m, n, s + 1, j + 1);
        }
        for j in m..nn {
            if j == s {
                chi[s][tau(j)] = SignedPow::signed(true, 0);
            }
        }
    }
    let caps: Vec<Option<i64>> =
        (0..nn).map(|s| if s >= m { Some(2) } else if cap_even { Some(prof.ell as i64) } else { None }).collect();

    let o = one(mode);
    let mut gens = Vec::new();
    for s in 0..nn {
        let (delta, antipode, label) = if s < m {
            let (t, sg, c) = if minus { (1, -1, mode.q_pow(-1)) } else { (-1, 1, mode.q()) };
            (
                vec![
                    (o.clone(), vec![nil(s)], vec![grp(sigma(s), t)]),
                    (o.clone(), vec![grp(big_theta(s), -1), grp(sigma(s), sg)], vec![nil(s)]),
                ],
                vec![(-c, vec![grp(big_theta(s), 1), nil(s)])],
                format!("(s{}^{}, Th{}^-1 s{}^{})", s + 1, t, s + 1, s + 1, sg),
            )
        } else {
            (
                vec![
                    (o.clone(), vec![nil(s)], vec![]),
                    (o.clone(), vec![grp(big_theta(s), -1), grp(tau(s), 1)], vec![nil(s)]),
                ],
                vec![(-o.clone(), vec![grp(big_theta(s), 1), grp(tau(s), 1), nil(s)])],
                format!("(1, Th{}^-1 t{})", s + 1, s + 1),
            )
        };
        gens.push(NilGen { name: names[s].clone(), kind: GenKind::SkewPrimitive(label), key: unit(nn, s, 1), delta, antipode });
    }

    let mut rels = Vec::new();
    for a in 0..nn {
        for b in a + 1..nn {
            rels.push(commutation(mode, &names, a, b, comm[a][b]));
        }
    }
    for s in 0..nn {
        if let Some(c) = caps[s] {
            rels.push(nilpotency(mode, &names, s, c as u32));
        }
    }
    for j in 0..k {
        for s in 0..nn {
            rels.push(conjugation(mode, &gnames, &names, j, s, chi[s][j]));
        }
    }
    let label = format!("D_q({m}|{n}{}){}", if restricted { ",1" } else { "" }, if minus { " with Δ^(−)" } else { "" });
    let mut params = params_mn(m, n, mode);
    params.push(("restricted".into(), restricted.to_string()));
    params.push(("coproduct".into(), if minus { "minus".into() } else { "standard".into() }));
    let p = HopfPresentation::assemble(
        label,
        params,
        mode.clone(),
        gnames,
        grels,
        NilPart::Quantum { comm, caps },
        gens,
        chi,
        rels,
    )?;
    Ok(finish(p))
}

/// `𝔄_q(m|n)` and `𝒯ℋ_q(m|n)`: `k_pow` imposes `𝒦(ε_i)^ℓ = 1`; `taft` adds `x_i^ℓ = 0`.
fn build_affine(m: usize, n: usize, mode: &Mode, k_pow: Option<u32>, taft: bool) -> Result<HopfPresentation> {
    let nn = m + n;
    if nn == 0 {
        return Err(Error::InvalidParameter("m + n must be positive".into()));
    }
    let gnames: Vec<String> = (1..=nn).map(|i| format!("K{i}")).collect();
    let names: Vec<String> = (1..=nn).map(|i| format!("x{i}")).collect();
    let mut grels = Vec::new();
    if let Some(l) = k_pow {
        for i in 0..m {
            let r = unit(nn, i, l as i64);
            grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
        }
    }
    for j in m..nn {
        let r = unit(nn, j, 2);
        grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
    }
    let mut chi = vec![vec![SignedPow::ONE; nn]; nn];
    let mut comm = vec![vec![SignedPow::ONE; nn]; nn];
    for s in 0..nn {
        for j in 0..nn {
            let th = theta_sp(m, n, j + 1, s + 1);
            let own = if j != s {
                SignedPow::ONE
            } else if s < m {
                SignedPow::q(1)
            } else {
                SignedPow::signed(true, 0)
            };
            chi[s][j] = own.mul(th);
            comm[s][j] = theta_sp(m, n, s + 1, j + 1);
        }
    }
    let caps: Vec<Option<i64>> =
        (0..nn).map(|s| if s >= m { Some(2) } else if taft { k_pow.map(|l| l as i64) } else { None }).collect();
    let gens: Vec<NilGen> = (0..nn).map(|s| taft_gen(mode, names[s].clone(), nn, s, s, &gnames[s])).collect();
    let mut rels = Vec::new();
    for a in 0..nn {
        for b in a + 1..nn {
            rels.push(commutation(mode, &names, a, b, comm[a][b]));
        }
    }
    for s in 0..nn {
        if let Some(c) = caps[s] {
            rels.push(nilpotency(mode, &names, s, c as u32));
        }
    }
    for j in 0..nn {
        for s in 0..nn {
            rels.push(conjugation(mode, &gnames, &names, j, s, chi[s][j]));
        }
    }
    let label = if taft { format!("TH_q({m}|{n})") } else { format!("A_q({m}|{n})") };
    let mut params = params_mn(m, n, mode);
    params.push(("K^l = 1".into(), k_pow.is_some().to_string()));
    let p = HopfPresentation::assemble(
        label,
        params,
        mode.clone(),
        gnames,
        grels,
        NilPart::Quantum { comm, caps },
        gens,
        chi,
        rels,
    )?;
    Ok(finish(p))
}

fn build_taft_mu(mu: &[Vec<SignedPow>], ells: &[u32], ords: Option<&[u32]>, mode: &Mode) -> Result<HopfPresentation> {
    let nn = ells.len();
    if nn == 0 || mu.len() != nn || mu.iter().any(|r| r.len() != nn) {
        return Err(Error::ShapeMismatch("μ must be a square matrix matching ℓ̄".into()));
    }
    let d = order_of(mode)?;
    for i in 0..nn {
        for j in 0..nn {
            if i != j && !mu[i][j].mul(mu[j][i]).eval(mode).is_one() {
                return Err(Error::InvalidParameter(format!("μ_{}{} μ_{}{} ≠ 1", i + 1, j + 1, j + 1, i + 1)));
            }
        }
        if sp_order(mu[i][i], mode, 2 * d) != Some(ells[i]) {
            return Err(Error::InvalidParameter(format!("ord(μ_{}{}) ≠ ℓ_{}", i + 1, i + 1, i + 1)));
        }
    }
    let group_ords: Vec<u32> = match ords {
        Some(o) => {
            if o.len() != nn || o.iter().zip(ells).any(|(mi, li)| *mi == 0 || mi % li != 0) {
                return Err(Error::InvalidParameter("each m_i must be a multiple of ℓ_i".into()));
            }
            o.to_vec()
        }
        None => ells.to_vec(),
    };
    let gnames: Vec<String> = (1..=nn).map(|i| format!("K{i}")).collect();
    let names: Vec<String> = (1..=nn).map(|i| format!("x{i}")).collect();
    let grels: Vec<GroupRelation> = (0..nn)
        .map(|i| {
            let r = unit(nn, i, group_ords[i] as i64);
            GroupRelation { name: render_group(&gnames, &r), exponents: r }
        })
        .collect();
    let mut chi = vec![vec![SignedPow::ONE; nn]; nn];
    for s in 0..nn {
        for j in 0..nn {
            chi[s][j] = mu[j][s];
        }
    }
    let caps: Vec<Option<i64>> = ells.iter().map(|&l| Some(l as i64)).collect();
    let gens: Vec<NilGen> = (0..nn).map(|s| taft_gen(mode, names[s].clone(), nn, s, s, &gnames[s])).collect();
    let mut rels = Vec::new();
    for a in 0..nn {
        for b in a + 1..nn {
            rels.push(commutation(mode, &names, a, b, mu[a][b]));
        }
        rels.push(nilpotency(mode, &names, a, ells[a]));
    }
    for j in 0..nn {
        for s in 0..nn {
            rels.push(conjugation(mode, &gnames, &names, j, s, chi[s][j]));
        }
    }
    let ls: Vec<String> = ells.iter().map(|l| l.to_string()).collect();
    let label = match ords {
        Some(o) => {
            let ms: Vec<String> = o.iter().map(|l| l.to_string()).collect();
            format!("TH_mu({}|{})", ls.join(","), ms.join(","))
        }
        None => format!("TH_mu({})", ls.join(",")),
    };
    let mus: Vec<String> = mu.iter().map(|r| r.iter().map(|x| x.render()).collect::<Vec<_>>().join(" ")).collect();
    let params = vec![("ells".into(), ls.join(",")), ("mu".into(), mus.join("; "))];
    let p = HopfPresentation::assemble(
        label,
        params,
        mode.clone(),
        gnames,
        grels,
        NilPart::Quantum { comm: mu.to_vec(), caps },
        gens,
        chi,
        rels,
    )?;
    Ok(finish(p))
}

fn build_gq(m: usize, n: usize, restricted: bool, k_ell: bool, mode: &Mode) -> Result<HopfPresentation> {
    let nn = m + n;
    if nn == 0 {
        return Err(Error::InvalidParameter("m + n must be positive".into()));
    }
    let prof = char_of(mode)?;
    let ell = match prof.parity {
        Parity::GenericQ if restricted => {
            return Err(Error::InvalidParameter("the restricted algebra needs a root of unity".into()))
        }
        Parity::GenericQ => None,
        Parity::EvenRoot => {
            return Err(Error::InvalidParameter("the Grassmann bosonization is stated for char(q) odd".into()))
        }
        Parity::OddRoot => Some(prof.ell),
    };
    let family = if restricted { Family::OmegaRestricted } else { Family::Omega };
    let space = Arc::new(SpaceSpec::new(family, m, n, mode.clone())?);
    let gnames: Vec<String> = (1..=nn).map(|i| format!("K{i}")).collect();
    let mut names: Vec<String> = (1..=nn).map(|i| format!("x{i}")).collect();
    let mut grels = Vec::new();
    if let Some(l) = ell.filter(|_| restricted || k_ell) {
        for i in 0..m {
            let r = unit(nn, i, l as i64);
            grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
        }
    }
    for j in m..nn {
        let r = unit(nn, j, 2);
        grels.push(GroupRelation { name: render_group(&gnames, &r), exponents: r });
    }
    let mut chi = vec![vec![SignedPow::ONE; nn]; nn];
    let mut comm = vec![vec![SignedPow::ONE; nn]; nn];
    for s in 0..nn {
        for j in 0..nn {
            let th = theta_sp(m, n, j + 1, s + 1);
            let own = if j != s {
                SignedPow::ONE
            } else if s < m {
                SignedPow::q(2)
            } else {
                SignedPow::signed(true, 0)
            };
            chi[s][j] = own.mul(th);
            comm[s][j] = theta_sp(m, n, s + 1, j + 1);
        }
    }
    let mut gens: Vec<NilGen> = (0..nn).map(|s| taft_gen(mode, names[s].clone(), nn, s, s, &gnames[s])).collect();
    if let (Some(l), false) = (ell, restricted) {
        for s in 0..m {
            let k = gens.len();
            let name = format!("x{}^({l})", s + 1);
            names.push(name.clone());
            gens.push(NilGen {
                name,
                kind: GenKind::DividedPowerPrimitive,
                key: unit(nn, s, l as i64),
                delta: vec![(one(mode), vec![nil(k)], vec![]), (one(mode), vec![], vec![nil(k)])],
                antipode: vec![(-one(mode), vec![nil(k)])],
            });
        }
    }
    let mut rels = Vec::new();
    for a in 0..nn {
        for b in a + 1..nn {
            rels.push(commutation(mode, &names, a, b, comm[a][b]));
        }
    }
    for s in 0..nn {
        if s >= m {
            rels.push(nilpotency(mode, &names, s, 2));
        } else if let Some(l) = ell {
            rels.push(nilpotency(mode, &names, s, l));
        }
    }
    for j in 0..nn {
        for s in 0..nn {
            rels.push(conjugation(mode, &gnames, &names, j, s, chi[s][j]));
        }
    }
    // The divided powers x_i^(ℓ) are central.
    for big in nn..gens.len() {
        for s in 0..nn {
            rels.push(Relation {
                name: format!("{} {} = {} {}", names[big], names[s], names[s], names[big]),
                terms: vec![(one(mode), vec![nil(big), nil(s)]), (-one(mode), vec![nil(s), nil(big)])],
            });
        }
        for j in 0..nn {
            rels.push(Relation {
                name: format!("{} {} {}^-1 = {}", gnames[j], names[big], gnames[j], names[big]),
                terms: vec![(one(mode), vec![grp(j, 1), nil(big), grp(j, -1)]), (-one(mode), vec![nil(big)])],
            });
        }
    }
    let label = format!("G_q({m}|{n}{})", if restricted { ",1" } else { "" });
    let mut params = params_mn(m, n, mode);
    params.push(("restricted".into(), restricted.to_string()));
    params.push(("K^l = 1".into(), (ell.is_some() && (restricted || k_ell)).to_string()));
    let p = HopfPresentation::assemble(
        label,
        params,
        mode.clone(),
        gnames,
        grels,
        NilPart::Grassmann(space),
        gens,
        chi,
        rels,
    )?;
    Ok(finish(p))
}

/// Relations present in only one of two presentations, compared by their rendered form.
pub fn rule_diff(a: &HopfPresentation, b: &HopfPresentation) -> (Vec<String>, Vec<String>) {
    let ra: BTreeSet<String> = a.relations.iter().map(|r| r.name.clone()).collect();
    let rb: BTreeSet<String> = b.relations.iter().map(|r| r.name.clone()).collect();
    (ra.difference(&rb).cloned().collect(), rb.difference(&ra).cloned().collect())
}

fn add_tensor(t: &mut Tensor, ks: Vec<super::Key>, c: ScalarQ) {
    super::add_into(t, ks, c);
}

fn tensor_of(terms: &[(ScalarQ, Elem, Elem)]) -> Tensor {
    let mut t = Tensor::new();
    for (c, a, b) in terms {
        for (ka, ca) in a {
            for (kb, cb) in b {
                add_tensor(&mut t, vec![ka.clone(), kb.clone()], &(c * ca) * cb);
            }
        }
    }
    t
}

/// Binomial coproduct expansions for powers and divided powers of `x_i`,
/// `i ∈ I₀` (1-based), for `1 ≤ p ≤ p_max`, plus the primitivity claims at a
/// root of unity.
pub fn divided_power_coproduct_check(m: usize, n: usize, i: usize, p_max: u32, mode: &Mode) -> Result<Vec<AxiomCheck>> {
    if i == 0 || i > m {
        return Err(Error::OutOfRange(format!("i = {i} must lie in I₀ = 1..={m}")));
    }
    let s = i - 1;
    let mut out = Vec::new();

    // 𝔄_q: Δ(x_i)^p = Σ_r (p over r)_q x_i^{p−r} 𝒦_i^r ⊗ x_i^r.
    let a = build(&HopfFamily::Aq { m, n, k_ell: false }, mode)?;
    for p in 1..=p_max {
        let lhs = a.delta_word(&[Letter::Nil(s, p)]);
        let mut rhs = Tensor::new();
        for r in 0..=p {
            let c = q_binom_unbalanced(p, r, mode)?;
            let left = a.eval_word(&[Letter::Nil(s, p - r), Letter::Group(s, r as i64)]);
            let right = a.eval_word(&[Letter::Nil(s, r)]);
            rhs = combine_t(&rhs, &tensor_of(&[(c, left, right)]));
        }
        out.push(AxiomCheck::new(
            format!("A_q: Δ(x{i}^{p}) = Σ (p over r)_q x^(p−r) K^r ⊗ x^r"),
            lhs == rhs,
            (lhs != rhs).then(|| a.render_tensor(&lhs)),
        ));
    }
    if let Some(d) = mode.order() {
        let ak = build(&HopfFamily::Aq { m, n, k_ell: true }, mode)?;
        let x_l = ak.eval_word(&[Letter::Nil(s, d)]);
        let lhs = ak.delta_word(&[Letter::Nil(s, d)]);
        let rhs = tensor_of(&[(mode.one(), x_l.clone(), ak.one()), (mode.one(), ak.one(), x_l.clone())]);
        out.push(AxiomCheck::new(format!("A_q: Δ(x{i}^{d}) is primitive when K^{d} = 1"), lhs == rhs, None));
        let s_l = ak.antipode_word(&[Letter::Nil(s, d)]);
        let neg: Elem = x_l.iter().map(|(k, c)| (k.clone(), -c.clone())).collect();
        out.push(AxiomCheck::new(format!("A_q: S(x{i}^{d}) = −x{i}^{d}"), s_l == neg, None));
    }

    // 𝔊_q: Δ(x_i^(p)) = Σ_r q^{C(p,2)−C(r,2)−C(p−r,2)} x^(p−r) K^r ⊗ x^(r).
    let prof = char_of(mode)?;
    if prof.parity == Parity::EvenRoot {
        return Ok(out);
    }
    let g = build(&HopfFamily::Gq { m, n, restricted: false, k_ell: true }, mode)?;
    let div = |p: u32| -> Result<super::Key> {
        let mut key = vec![0; m + n];
        key[s] = p as i64;
        Ok(super::Key { nil: key, group: g.group.identity() })
    };
    let top = if prof.ell == 0 { p_max } else { p_max.min(prof.ell) };
    for p in 1..=top {
        let lhs = g.delta_key(&div(p)?)?;
        let mut rhs = Tensor::new();
        for r in 0..=p {
            let (pp, rr) = (p as i64, r as i64);
            let e = binomial(pp, 2) - binomial(rr, 2) - binomial(pp - rr, 2);
            let mut kl = div(p - r)?;
            kl.group = g.group.generator(s, rr);
            add_tensor(&mut rhs, vec![kl, div(r)?], mode.q_pow(e as i64));
        }
        if prof.ell != 0 && p == prof.ell {
            let prim = tensor_of(&[
                    (mode.one(), g.eval_word(&[Letter::Nil(single_gen(&g, s, p), 1)]), g.one()),
                    (mode.one(), g.one(), g.eval_word(&[Letter::Nil(single_gen(&g, s, p), 1)])),
                ],
            );
            out.push(AxiomCheck::new(format!("G_q: Δ(x{i}^({p})) is primitive"), lhs == prim, None));
            let middle = rhs.keys().filter(|ks| ks[1].nil[s] != 0 && ks[1].nil[s] != p as i64).count();
            out.push(AxiomCheck::new(
                format!("G_q: the expansion formula at p = {p} is not primitive (informational)"),
                true,
                Some(format!("{middle} middle terms x^(ℓ−r)K^r ⊗ x^(r) with nonzero coefficient")),
            ));
        } else {
            out.push(AxiomCheck::new(
                format!("G_q: Δ(x{i}^({p})) = Σ q^(C(p,2)−C(r,2)−C(p−r,2)) x^(p−r) K^r ⊗ x^(r)"),
                lhs == rhs,
                (lhs != rhs).then(|| g.render_tensor(&lhs)),
            ));
        }
    }
    Ok(out)
}

fn single_gen(p: &HopfPresentation, s: usize, e: u32) -> usize {
    p.nil_gens
        .iter()
        .position(|g| g.key.iter().enumerate().all(|(i, &x)| if i == s { x == e as i64 } else { x == 0 }))
        .expect("generator present")
}

fn combine_t(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = a.clone();
    for (k, v) in b {
        super::add_into(&mut out, k.clone(), v.clone());
    }
    out
}

/// `Δ(∂_i)^ℓ = ∂_i^ℓ ⊗ 1 + 1 ⊗ ∂_i^ℓ` for each `i ∈ I₀`, computed over the
/// restricted group quotient with `∂_i^ℓ` left nonzero.
pub fn partial_power_primitivity(m: usize, n: usize, mode: &Mode) -> Result<Vec<AxiomCheck>> {
    let ell = char_of(mode)?.ell;
    let p = build_dq(m, n, true, false, false, mode)?;
    let mut out = Vec::new();
    for s in 0..m {
        let lhs = p.delta_word(&[Letter::Nil(s, ell)]);
        let pw = p.eval_word(&[Letter::Nil(s, ell)]);
        let rhs = tensor_of(&[(mode.one(), pw.clone(), p.one()), (mode.one(), p.one(), pw)]);
        out.push(AxiomCheck::new(
            format!("Δ(d{})^{ell} = d{}^{ell} ⊗ 1 + 1 ⊗ d{}^{ell}", s + 1, s + 1, s + 1),
            lhs == rhs,
            (lhs != rhs).then(|| p.render_tensor(&lhs)),
        ));
    }
    Ok(out)
}
