use fracsusy::cli::run_captured;

fn main() {
    for args in [
        vec!["normalize-u", "--p", "3", "k p+"],
        vec!["signature", "--p", "5", "--format", "text"],
        vec!["omega", "--s", "1", "--format", "text"],
        vec!["kernel-eval", "--quad", "4", "--nu", "0.25", "--format", "text"],
        vec!["kernel-verify", "--grid", "rho=1,2;beta=0;a=0.3", "--quad", "3"],
    ] {
        let out = run_captured(std::iter::once("fracsusy").chain(args.iter().copied()));
        println!("$ fracsusy {}  -> exit {}", args.join(" "), out.code);
        print!("{}", out.stdout);
    }
}
