fn main() {
    // Dense non-symmetric eigensolver comes from the system LAPACKE.
    println!("cargo:rustc-link-lib=dylib=lapacke");
    println!("cargo:rustc-link-lib=dylib=lapack");
    println!("cargo:rustc-link-lib=dylib=blas");
}
