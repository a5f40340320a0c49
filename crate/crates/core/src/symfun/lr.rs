use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Basis, SymFun};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::guard;

type ProductCache = RwLock<HashMap<(Partition, Partition), Arc<SymFun>>>;

fn cache() -> &'static ProductCache {
    static C: OnceLock<ProductCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `s_λ s_μ` in the Schur basis, memoized.
pub(crate) fn schur_product(lambda: &Partition, mu: &Partition) -> Result<Arc<SymFun>> {
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(v) = cache().read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let a = SymFun::basis_element(Basis::S, key.0.clone());
    let b = SymFun::basis_element(Basis::S, key.1.clone());
    let product = Arc::new(a.multiply(&b)?);
    cache().write().unwrap().insert(key, product.clone());
    Ok(product)
}

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`, the coefficient of
/// `s_ν` in `s_λ s_μ`, computed through the power-sum product.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.weight() + mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.union(mu),
            right: nu.clone(),
        });
    }
    guard::check("littlewood_richardson", nu.weight(), guard::LR_WEIGHT)?;
    let c = schur_product(lambda, mu)?.coeff(nu);
    if !c.is_integer() || c.is_negative() {
        return Err(Error::NonIntegral(format!("c^{nu}_{{{lambda},{mu}}} = {c}")));
    }
    Ok(c.to_integer())
}
