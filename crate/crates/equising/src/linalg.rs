//! Division-free linear algebra over an arbitrary commutative ring.
//!
//! The Berkowitz algorithm computes the characteristic polynomial of a square
//! matrix without any division, which is exactly what towers of residue rings
//! with zero divisors require: determinants, norms and inverses (through
//! Cayley-Hamilton) all reduce to it.

/// Minimal commutative ring interface used by [`berkowitz_charpoly`].
pub trait Ring {
    type El: Clone;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }
}

/// Characteristic polynomial `det(t·I - M)` of a square matrix `M`.
///
/// Returns the coefficients in descending degree order:
/// `[1, c_{n-1}, ..., c_0]` for `t^n + c_{n-1} t^{n-1} + ... + c_0`.
/// The empty matrix yields `[1]`.
pub fn berkowitz_charpoly<R: Ring>(ring: &R, m: &[Vec<R::El>]) -> Vec<R::El> {
    let n = m.len();
    if n == 0 {
        return vec![ring.one()];
    }
    // C holds the char poly of the leading i x i principal submatrix.
    let mut c = vec![ring.one(), ring.neg(&m[0][0])];
    for i in 2..=n {
        let a = &m[i - 1][i - 1];
        // Toeplitz column: [1, -a, -R·S, -R·A·S, ...]
        let mut toeplitz = Vec::with_capacity(i + 1);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a));
        // v starts as the column S = M[0..i-1][i-1]
        let mut v: Vec<R::El> = (0..i - 1).map(|r| m[r][i - 1].clone()).collect();
        for _ in 2..=i {
            // t_j = -(R · v)
            let mut dot = ring.zero();
            for (col, vv) in v.iter().enumerate() {
                dot = ring.add(&dot, &ring.mul(&m[i - 1][col], vv));
            }
            toeplitz.push(ring.neg(&dot));
            // v <- A · v with A the leading (i-1) principal submatrix
            let mut nv = Vec::with_capacity(i - 1);
            for r in 0..i - 1 {
                let mut acc = ring.zero();
                for (col, vv) in v.iter().enumerate() {
                    acc = ring.add(&acc, &ring.mul(&m[r][col], vv));
                }
                nv.push(acc);
            }
            v = nv;
        }
        // C_i = T · C_{i-1}, T lower-triangular Toeplitz with first column above
        let mut next = Vec::with_capacity(i + 1);
        for row in 0..=i {
            let mut acc = ring.zero();
            for col in 0..i.min(row + 1) {
                if row - col < toeplitz.len() {
                    acc = ring.add(&acc, &ring.mul(&toeplitz[row - col], &c[col]));
                }
            }
            next.push(acc);
        }
        c = next;
    }
    c
}

/// Determinant through the characteristic polynomial: `det(M) = (-1)^n c_0`.
pub fn determinant<R: Ring>(ring: &R, m: &[Vec<R::El>]) -> R::El {
    let n = m.len();
    let cp = berkowitz_charpoly(ring, m);
    let c0 = cp[n].clone();
    if n % 2 == 0 {
        c0
    } else {
        ring.neg(&c0)
    }
}
