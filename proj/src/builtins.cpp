// Built-in presentations and scaling maps, in the presentation file grammar.

namespace hopfkit::detail
{

extern const char *const kBuiltinLibrary;

const char *const kBuiltinLibrary = R"HPK(
# Functions on the Jordanian quantum group SL_h(2), T = ((a, b), (c, d)).
algebra fun-slh2
params h
gens a < b < c < d
rel [c,a] = h*c^2
rel [b,a] = h - h*a^2
rel [a,d] = h*a*c - h*d*c
rel [c,d] = h*c^2
rel [b,d] = h - h*d^2
rel [c,b] = h*a*c + h*c*d
extra b*c = a*d - h*a*c - 1
coproduct a = a @ a + b @ c
coproduct b = a @ b + b @ d
coproduct c = c @ a + d @ c
coproduct d = c @ b + d @ d
counit a = 1
counit b = 0
counit c = 0
counit d = 1
antipode a = d - h*c
antipode b = -b + h*a - h*d + h^2*c
antipode c = -c
antipode d = a + h*c
end

algebra uh-sl2
params h
gens J+ < J3 < J-
alias Jp J+
alias Jm J-
rel [J3,J+] = 2*divh(sinh(h*J+), 1)
rel [J3,J-] = -(J-*cosh(h*J+) + cosh(h*J+)*J-)
rel [J+,J-] = J3
coproduct J+ = J+ @ 1 + 1 @ J+
coproduct J3 = J3 @ exp(h*J+) + exp(-h*J+) @ J3
coproduct J- = J- @ exp(h*J+) + exp(-h*J+) @ J-
counit J+ = 0
counit J3 = 0
counit J- = 0
antipode J+ = -J+
antipode J3 = -exp(h*J+)*J3*exp(-h*J+)
antipode J- = -exp(h*J+)*J-*exp(-h*J+)
end

# Contracted group: gamma = c/eps.
algebra fun-ph11
params h
gens alpha < beta < gamma < delta
rel [gamma,alpha] = 0
rel [beta,alpha] = h - h*alpha^2
rel [alpha,delta] = 0
rel [beta,delta] = h - h*delta^2
rel [gamma,delta] = 0
rel [gamma,beta] = h*alpha*gamma + h*gamma*delta
extra alpha*delta = 1
coproduct alpha = alpha @ alpha
coproduct beta = alpha @ beta + beta @ delta
coproduct gamma = gamma @ alpha + delta @ gamma
coproduct delta = delta @ delta
counit alpha = 1
counit beta = 0
counit gamma = 0
counit delta = 1
antipode alpha = delta
antipode beta = -beta + h*alpha - h*delta
antipode gamma = -gamma
antipode delta = alpha
end

algebra uh-p11
params h
gens P+ < K < P-
alias Pp P+
alias Pm P-
rel [K,P+] = divh(sinh(h*P+), 1)
rel [K,P-] = -P-*cosh(h*P+)
rel [P+,P-] = 0
coproduct P+ = P+ @ 1 + 1 @ P+
coproduct K = K @ exp(h*P+) + exp(-h*P+) @ K
coproduct P- = P- @ exp(h*P+) + exp(-h*P+) @ P-
counit P+ = 0
counit K = 0
counit P- = 0
antipode P+ = -P+
antipode K = -K + sinh(h*P+)
antipode P- = -P-
note coproduct(P-): first tensor factor taken as P- where the published formula prints J-
end

algebra heis3
params h
gens A < H < A+
alias Ad A+
rel [H,A] = 0
rel [H,A+] = 0
rel [A,A+] = H
central H
coproduct A = A @ 1 + 1 @ A
coproduct H = H @ exp(h*A) + exp(-h*A) @ H
coproduct A+ = A+ @ exp(h*A) + exp(-h*A) @ A+
counit A = 0
counit H = 0
counit A+ = 0
antipode A = -A
antipode H = -H
antipode A+ = -exp(h*A)*A+*exp(-h*A)
end

# Oscillator algebra; carries the structure maps obtained by contraction,
# which do not close into a Hopf algebra.
algebra osc4
params h
gens A < N < H < A+
alias Ad A+
rel [A,A+] = H
rel [N,A] = -divh(sinh(h*A), 1)
rel [N,A+] = (A+*cosh(h*A) + cosh(h*A)*A+)/2
central H
coproduct A = A @ 1 + 1 @ A
coproduct N = N @ exp(h*A) + exp(-h*A) @ N
coproduct H = H @ exp(h*A) + exp(-h*A) @ H
coproduct A+ = A+ @ exp(h*A) + exp(-h*A) @ A+
counit A = 0
counit N = 0
counit H = 0
counit A+ = 0
antipode A = -A
antipode N = -exp(h*A)*N*exp(-h*A)
antipode H = -H
antipode A+ = -exp(h*A)*A+*exp(-h*A)
end

scaling fun-poincare from fun-slh2 to fun-ph11
map alpha = a
map beta = b
map gamma = eps^-1*c
map delta = d
end

scaling poincare from uh-sl2 to uh-p11
map P+ = J+
map K = J3/2
map P- = eps*J-
renorm casimir-sl2 1
end

scaling heisenberg from uh-sl2 to heis3
map A = J+
map H = eps*J3
map A+ = eps*J-
end

# sl_h(2) plus a central u(1) generator K.
scaling oscillator from uh-sl2 to osc4
extend K
coproduct K = K @ exp(h*J+) + exp(-h*J+) @ K
counit K = 0
antipode K = -K
map A = J+
map N = -J3/2 + eps^-1*K/2
map H = K
map A+ = eps*J-
end
)HPK";

} // namespace hopfkit::detail
