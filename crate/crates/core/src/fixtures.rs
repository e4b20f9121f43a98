//! Permutation models of local Galois groups with their ramification
//! filtrations, used as tower fixtures for induced filtrations.

use crate::error::Result;
use crate::group::{Perm, PermGroup};
use crate::ramification::SubgroupFiltration;

/// One tower `K ⊆ F ⊆ E`: `Gal(E/K)` with its filtration and the normal
/// subgroup `H = Gal(E/F)`.
#[derive(Clone, Debug)]
pub struct TowerFixture {
    pub name: String,
    pub filtration: SubgroupFiltration,
    pub subgroup: PermGroup,
}

/// `S_4 × C_2` on 6 points with `G_0 = A_4 × C_2`, `G_1 = V_4 × C_2` and
/// `G_2 = ⋯ = G_9 = C_2` the center, residue prime 2.
pub fn s4_times_c2() -> Result<SubgroupFiltration> {
    let p = |cycles: &[&[u32]]| Perm::from_cycles(6, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    let s4_gens = vec![p(&[&[0, 1]])?, p(&[&[0, 1, 2, 3]])?];
    let z = p(&[&[4, 5]])?;
    let mut gens = s4_gens;
    gens.push(z.clone());
    let g = PermGroup::generate(6, gens)?;
    let a4 = vec![p(&[&[0, 1, 2]])?, p(&[&[1, 2, 3]])?];
    let v4 = vec![p(&[&[0, 1], &[2, 3]])?, p(&[&[0, 2], &[1, 3]])?];
    let with_z = |mut gens: Vec<Perm>| {
        gens.push(z.clone());
        PermGroup::generate(6, gens)
    };
    let g0 = with_z(a4)?;
    let g1 = with_z(v4)?;
    let center = PermGroup::generate(6, vec![z.clone()])?;
    let mut levels = vec![g0, g1];
    levels.extend(std::iter::repeat(center).take(8));
    SubgroupFiltration::new(2, g, levels)
}

/// The center `C_2` of [`s4_times_c2`], whose fixed field has group `S_4`.
pub fn s4_times_c2_center() -> Result<PermGroup> {
    PermGroup::generate(6, vec![Perm::from_cycles(6, &[vec![4, 5]])?])
}

/// `Gal(Q_p(ζ_{p^n}, ζ_{p^f−1}) / Q_p) ≅ (Z/p^n)^× × C_f`, acting on
/// `Z/p^n` by multiplication and on `f` extra points by a cycle. The
/// lower filtration is `G_i = {a ≡ 1 mod p^v}` for `p^{v−1} ≤ i < p^v`.
pub fn cyclotomic(p: u64, n: u32, f: usize) -> Result<SubgroupFiltration> {
    let modulus = p.pow(n) as usize;
    let degree = modulus + f;
    let units: Vec<usize> = (1..modulus).filter(|a| a % p as usize != 0).collect();
    let mult = |a: usize| {
        let mut images: Vec<u32> = (0..modulus).map(|x| ((a * x) % modulus) as u32).collect();
        images.extend((modulus..degree).map(|x| x as u32));
        Perm::from_images(images)
    };
    let mut gens = units.iter().map(|&a| mult(a)).collect::<Result<Vec<_>>>()?;
    if f > 1 {
        let cycle: Vec<u32> = (modulus..degree).map(|x| x as u32).collect();
        gens.push(Perm::from_cycles(degree, &[cycle])?);
    }
    let g = PermGroup::generate(degree, gens)?;
    let inertia = |v: u32| {
        let m = p.pow(v) as usize;
        g.filter_subgroup(|s| (modulus..degree).all(|x| s.apply(x as u32) == x as u32) && s.apply(1) as usize % m == 1 % m)
    };
    let mut levels = vec![inertia(0)];
    let mut v = 1;
    let mut i = 1u64;
    while v < n {
        while i < p.pow(v) {
            levels.push(inertia(v));
            i += 1;
        }
        v += 1;
    }
    SubgroupFiltration::new(p, g, levels)
}

/// Every tower obtained from the models above by a normal subgroup `H`.
pub fn tower_fixtures() -> Result<Vec<TowerFixture>> {
    let mut models = vec![("S4xC2".to_string(), s4_times_c2()?)];
    for (p, n, f) in [(2, 3, 1), (2, 4, 1), (2, 5, 1), (3, 2, 1), (3, 3, 1), (5, 2, 1), (2, 3, 3), (3, 2, 2)] {
        models.push((format!("cyclotomic p={p} n={n} f={f}"), cyclotomic(p, n, f)?));
    }
    let mut out = Vec::new();
    for (name, filtration) in models {
        for (k, h) in filtration.group().normal_subgroups()?.into_iter().enumerate() {
            out.push(TowerFixture { name: format!("{name} / H#{k} (order {})", h.order()), filtration: filtration.clone(), subgroup: h });
        }
    }
    Ok(out)
}
